#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wreathlab/wreath_aut.hpp"

namespace wreathlab {

/// Default carrier cap for direct orbit enumeration on block windows.
constexpr long long kDefaultCarrierCap = 10'000;

enum class TwistedMethod { Orbit, Cokernel, FixedClasses };

struct TwistedClassReport {
    long long count = 0;
    std::vector<int> representatives;  // least-index per class, sorted
    TwistedMethod method = TwistedMethod::Orbit;
};

/// Orbits of sigma . alpha = sigma alpha phi(sigma)^-1 over all |G|^2 action
/// steps (union-find, least-index representatives).
TwistedClassReport twisted_classes(const FiniteGroup& G, const GroupAut& phi);
/// |coker(Id - phi)| for abelian G.
long long reidemeister_abelian(const FiniteGroup& G, const GroupAut& phi);
/// Number of ordinary conjugacy classes C with phi(C) = C.
long long reidemeister_fh(const FiniteGroup& G, const GroupAut& phi);

// --- blocks of a mirrored compatible-pair spec ---

/// Twisted class count of the block map: cokernel route for abelian G,
/// orbit enumeration otherwise (carrier capped).
long long block_class_count(const WreathGroup& W, const LampAutSpec& s, int i,
                            long long carrier_cap = kDefaultCarrierCap);
/// Orbit-enumeration route, usable for any G with carrier <= cap (the
/// cross-check partner of the cokernel route on abelian blocks).
long long block_class_count_orbit(const WreathGroup& W, const LampAutSpec& s, int i,
                                  long long carrier_cap = kDefaultCarrierCap);

/// Blockwise product of class counts over the window's blocks (indices are
/// canonicalized, duplicates collapse).
long long window_class_count(const WreathGroup& W, const LampAutSpec& s,
                             const std::vector<int>& window);
/// Direct orbit enumeration on the window carrier (product of block carriers,
/// capped); the independent route behind the blockwise decomposition.
long long window_direct_count(const WreathGroup& W, const LampAutSpec& s,
                              const std::vector<int>& window,
                              long long carrier_cap = kDefaultCarrierCap);

// --- Reidemeister number of the induced wreath automorphism ---

struct InfiniteEvidence {
    std::string rule;  // "identity-on-Z" (eps=+1) or "pair-block"
    std::optional<int> block_index;
    long long block_count = 0;  // >= 2 when rule == "pair-block"
};

struct FiniteEvidence {
    long long value = 0;  // = r_phi_prime + r_t_twist
    long long r_phi_prime = 0;
    long long r_t_twist = 0;
    long long pair_block_count = 1;
};

struct ReidemeisterResult {
    enum class Kind { Finite, InfiniteCertified, Unknown } kind = Kind::Unknown;
    FiniteEvidence finite;       // valid when kind == Finite
    InfiniteEvidence infinite;   // valid when kind == InfiniteCertified

    static ReidemeisterResult make_finite(FiniteEvidence e) {
        return {Kind::Finite, e, {}};
    }
    static ReidemeisterResult make_infinite(InfiniteEvidence e) {
        return {Kind::InfiniteCertified, {}, std::move(e)};
    }
    std::string to_string() const;
};

/// eps=+1: infinite (the quotient automorphism of Z is the identity).
/// eps=-1: a pair block with >= 2 classes certifies infinity; otherwise
/// R = R(phi') + R(t.phi') with the middle-block count contributing on the
/// even-offset side and 1 on the odd side.
ReidemeisterResult reidemeister_wreath(const WreathGroup& W, const LampAutSpec& s,
                                       long long carrier_cap = kDefaultCarrierCap);

}  // namespace wreathlab
