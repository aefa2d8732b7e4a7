#pragma once

#include <string>
#include <vector>

#include "wreathlab/wreath.hpp"

namespace wreathlab {

/// One word token.  gen = -1 means the lamp generator `a` (AT set only);
/// gen = k >= 0 means `t a^k` (TA set; k = 0 is plain `t`, also the AT `t`).
struct WordToken {
    int gen;
    int sign;  // +1 or -1

    bool operator==(const WordToken&) const = default;
};

struct Word {
    GenSet gens = GenSet::AT;
    int lamp_order = 2;
    std::vector<WordToken> tokens;

    bool operator==(const Word&) const = default;
};

/// Grammar (whitespace separated): `t`, `a`, `(ta^K)` for 1 <= K < n with
/// `(ta)` = `(ta^1)`; any token may carry a `^-1` suffix.
Word parse_word(const std::string& text, GenSet gens, int lamp_order);
std::string print_word(const Word& w);
WreathElement eval_word(const WreathGroup& W, const Word& w);

}  // namespace wreathlab
