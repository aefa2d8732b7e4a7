#pragma once

#include <string>
#include <vector>

#include "wreathlab/words.hpp"
#include "wreathlab/wreath.hpp"

namespace wreathlab {

enum class NormalFormSide { RF, LF };

/// Normal form of g in L_n = Z_n wr Z.  Exponents are reduced into
/// {-h..h} with h = floor(n/2); for even n the representative +h is kept and
/// -h never appears.  nonneg indices are >= 0 and strictly increasing, neg
/// indices are < 0 and strictly decreasing (word order of the rf form).
struct NormalForm {
    NormalFormSide side = NormalFormSide::RF;
    std::vector<std::pair<int, int>> nonneg;  // (index i >= 0, exponent e != 0)
    std::vector<std::pair<int, int>> neg;     // (index -j < 0, exponent f != 0)
    int shift = 0;
    int lamp_order = 2;

    bool operator==(const NormalForm&) const = default;
};

/// Requires a cyclic base group.
NormalForm normal_form(const WreathGroup& W, const WreathElement& g,
                       NormalFormSide side = NormalFormSide::RF);
/// Expansion into an {a,t} word whose evaluation reproduces the element.
Word to_word(const NormalForm& nf);
std::string to_string(const NormalForm& nf);

/// Word length over {a,t} via the closed form
///   sum |e_i| + sum |f_j| + min{2 j_l + i_k + |m - i_k|, 2 i_k + j_l + |m + j_l|}
/// with i_k (j_l) read as 0 when the corresponding side carries no lamps.
int word_length_ct(const WreathGroup& W, const WreathElement& g);

}  // namespace wreathlab
