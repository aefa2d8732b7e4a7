#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wreathlab/twisted.hpp"

namespace wreathlab {

// ---------------------------------------------------------------------------
// Certificate-producing decision procedure for property R-infinity of G wr Z.
// ---------------------------------------------------------------------------

struct Caps {
    int aut_cap = kDefaultAutCap;
    long long carrier_cap = kDefaultCarrierCap;
    int ball_cap = WreathGroup::kDefaultBallCap;
};

/// True iff the primary decomposition has a factor (Z_{p^k})^r with
/// p in {2,3} and r = 1.  Throws std::domain_error on non-abelian input.
bool in_frak_A(const FiniteGroup& G);
bool in_frak_A(const AbelianDecomposition& d);

struct Certificate {
    // one of: cyclic-4.1, abelian-3.7, ab-quotient-5.5, center-5.5,
    // sylow-5.8, simple-outer-5.12, alternating-5.13, symmetric-5.14,
    // order-2p-5.6
    std::string rule;
    std::string support;  // recomputable facts backing the rule
};

struct Witness {
    LampAutSpec spec;
    long long reidemeister_value = 0;
};

struct Verdict {
    enum class Kind { RInf, NotRInf, Unknown } kind = Kind::Unknown;
    std::optional<Certificate> certificate;        // chosen rule (first in order)
    std::vector<Certificate> fired;                // every applicable rule
    std::optional<Witness> witness;                // for NotRInf
    std::vector<std::string> rules_tried;          // evaluation trace incl. skips
    std::string group_name;

    bool fired_rule(const std::string& rule) const;
    std::string to_string() const;
};

Verdict classify(const FiniteGroup& G, const Caps& caps = {});

struct CyclicCrossRow {
    int m = 0;
    bool expected_rinf = false;  // 2|m or 3|m
    bool got_rinf = false;
    long long witness_value = 0;  // for NotRInf rows
    bool pass = false;
};

struct CyclicCrossReport {
    std::vector<CyclicCrossRow> rows;
    bool pass = false;
    std::string to_string() const;
};

/// classify(C(m)) must say RInf exactly when 2|m or 3|m, witnesses re-verified.
CyclicCrossReport cross_validate_cyclic(int limit, const Caps& caps = {});

}  // namespace wreathlab
