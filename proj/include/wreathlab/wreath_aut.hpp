#pragma once

#include <string>
#include <vector>

#include "wreathlab/wreath.hpp"

namespace wreathlab {

// ---------------------------------------------------------------------------
// Automorphisms of G wr Z built from compatible pairs: a base automorphism
// xi of G, an offset c and a sign eps define
//   phi'(g at position i) = xi(g) at position c + eps*i,   phibar(t) = t^eps.
// The pair satisfies phi'(Theta(b)(a)) = Theta(phibar(b))(phi'(a)), so it
// induces an automorphism of the wreath product.
// ---------------------------------------------------------------------------

struct LampAutSpec {
    GroupAut xi;
    int offset = 0;  // c
    int eps = +1;    // +1 | -1

    /// The t-twist t . phi': same xi, offset c+1 (same eps).
    LampAutSpec t_twist() const { return {xi, offset + 1, eps}; }
    std::string to_string() const;
};

/// Validates xi and spot-checks the compatibility identity on a fixed sample.
LampAutSpec make_autospec(const WreathGroup& W, GroupAut xi, int offset, int eps);
/// Parse `xi=<aut-index|*k> c=<int> eps=<+1|-1>` (aut-cap applies to indexed form).
LampAutSpec parse_autospec(const WreathGroup& W, const std::string& text,
                           int aut_cap = kDefaultAutCap);

WreathElement apply_aut(const WreathGroup& W, const LampAutSpec& s, const WreathElement& g);
LampConfig apply_aut_lamps(const WreathGroup& W, const LampAutSpec& s, const LampConfig& c);

// --- blocks (eps = -1 only) ---

enum class BlockKind { Pair, Middle };

/// Restriction of phi' to the block {i, c-i}: on G+G when i != c-i
/// ((x,y) -> (xi(y), xi(x))), on G alone when 2i = c (x -> xi(x)).
struct BlockMap {
    BlockKind kind = BlockKind::Pair;
    int index = 0;    // i
    int partner = 0;  // c - i (== index for middle blocks)
    GroupAut xi;

    long long carrier_size(const FiniteGroup& G) const;
    /// Image of a carrier point (pair blocks: p = x*|G| + y).
    long long map(const FiniteGroup& G, long long p) const;
};

BlockMap block_map(const WreathGroup& W, const LampAutSpec& s, int i);
/// Canonical representative of the block containing position i: min(i, c-i).
int block_id(const LampAutSpec& s, int i);

/// All carrier points fixed by the block map (includes the trivial one).
std::vector<long long> block_fixed_points(const WreathGroup& W, const LampAutSpec& s, int i);

// --- characteristic subgroups ---

enum class CharSubgroupKind {
    LampBase,         // (+) G_i: shift = 0
    CommutatorLamps,  // (+) [G,G]_i: shift = 0, lamp values in [G,G]
    CenterWreath,     // Z(G) wr Z
    OrderSubgroup,    // H_d = <tau^{n/d}> wr Z, cyclic base, d in {2,3}, d | n
    SylowWreath,      // S_p wr Z, requires a unique Sylow p-subgroup
};

struct CharSubgroupTag {
    CharSubgroupKind kind = CharSubgroupKind::LampBase;
    int param = 0;  // d for OrderSubgroup, p for SylowWreath

    static CharSubgroupTag lamp_base() { return {CharSubgroupKind::LampBase, 0}; }
    static CharSubgroupTag commutator_lamps() { return {CharSubgroupKind::CommutatorLamps, 0}; }
    static CharSubgroupTag center_wreath() { return {CharSubgroupKind::CenterWreath, 0}; }
    static CharSubgroupTag order_subgroup(int d) { return {CharSubgroupKind::OrderSubgroup, d}; }
    static CharSubgroupTag sylow_wreath(int p) { return {CharSubgroupKind::SylowWreath, p}; }
    std::string to_string() const;
};

bool is_member(const WreathGroup& W, const WreathElement& g, const CharSubgroupTag& tag);

struct CharCheckReport {
    CharSubgroupTag tag;
    int window = 0;
    size_t members_checked = 0;
    size_t specs_checked = 0;
    bool pass = false;
    std::string violation;  // first violation, empty when pass

    std::string to_string() const;
};

/// For every spec, applies it to every subgroup member in the TA ball of the
/// given radius and verifies the image stays in the subgroup.
CharCheckReport verify_characteristic(const WreathGroup& W, const CharSubgroupTag& tag,
                                      const std::vector<LampAutSpec>& specs, int window);

/// Every compatible-pair spec for xi in Aut(G), c in {0,1}, eps in {+1,-1}.
std::vector<LampAutSpec> all_compatible_specs(const WreathGroup& W,
                                              int aut_cap = kDefaultAutCap);

}  // namespace wreathlab
