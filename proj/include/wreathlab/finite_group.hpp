#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wreathlab/errors.hpp"

namespace wreathlab {

// ---------------------------------------------------------------------------
// Finite groups as explicit multiplication structures.
//
// Elements are integer indices 0..order-1 with a frozen, documented ordering
// per family:
//   cyclic Cn     : residues 0..n-1, generator a = 1
//   dihedral D2n  : rotations r^0..r^(n-1) then reflections r^0 s..r^(n-1) s
//   quaternion Q8 : 1, -1, i, -i, j, -j, k, -k
//   symmetric Sn  : permutations in lexicographic one-line order
//   alternating An: even permutations in lexicographic one-line order
//   direct sums   : mixed-radix, leftmost factor most significant
//   custom        : the order of the supplied table
//
// Groups of order <= kTableCap are backed by a materialized table; Sn/An for
// n up to 8 compose permutations directly so that S8 (order 40320) stays
// usable without a 40320^2 table.
// ---------------------------------------------------------------------------

enum class Family {
    Cyclic,
    Dihedral,
    Quaternion8,
    Symmetric,
    Alternating,
    DirectSum,
    Custom,
};

std::string family_name(Family f);

class FiniteGroup {
public:
    // Largest order for which a full multiplication table is materialized.
    static constexpr int kTableCap = 1024;
    // Largest order for which group axioms are verified exhaustively on
    // custom tables.
    static constexpr int kValidateCap = 256;

    FiniteGroup() = default;

    // Family builders.
    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int order2n);        // order must be even, >= 4
    static FiniteGroup quaternion8();
    static FiniteGroup symmetric(int n);             // n <= 8
    static FiniteGroup alternating(int n);           // n <= 8
    static FiniteGroup direct_sum(const std::vector<FiniteGroup>& parts);
    // Custom table; validated (Latin square, identity, inverses, and
    // associativity exhaustively for order <= kValidateCap).
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                  std::vector<std::string> labels = {});

    int order() const { return order_; }
    int identity() const { return identity_; }
    int op(int a, int b) const;
    int inv(int a) const { return inverse_[a]; }
    int power(int a, long long e) const;
    int conj(int g, int x) const { return op(op(g, x), inv(g)); }  // g x g^-1
    int element_order(int a) const;

    const std::string& label(int a) const { return labels_[a]; }
    Family family() const { return family_; }
    int family_param() const { return family_param_; }  // n for Cn/Sn/An, 2n for D2n
    std::string name() const { return name_; }

    bool is_abelian() const;
    bool has_table() const { return !table_.empty(); }

    // Permutation backing (Sn/An only): one-line images, length family_param().
    const std::vector<std::vector<int>>* permutations() const;

private:
    int order_ = 1;
    int identity_ = 0;
    Family family_ = Family::Custom;
    int family_param_ = 0;
    std::string name_ = "C1";
    std::vector<int> inverse_{0};
    std::vector<std::string> labels_{"e"};
    std::vector<int32_t> table_{0};           // order x order, row-major; empty if perm-backed
    std::vector<std::vector<int>> perms_;     // Sn/An backing
    std::vector<int32_t> perm_rank_;          // Lehmer rank over Sn -> element index

    void finish(Family fam, int param, std::string name);
    friend FiniteGroup make_perm_group(Family fam, int n);
};

/// An automorphism of a finite group, stored as its image array.
struct GroupAut {
    std::vector<int> image;

    bool operator==(const GroupAut&) const = default;
    int operator()(int x) const { return image[x]; }
};

GroupAut identity_aut(const FiniteGroup& G);
/// x -> k*x on a cyclic group (k must be a unit mod n).
GroupAut unit_aut(const FiniteGroup& G, int k);
bool is_automorphism(const FiniteGroup& G, const GroupAut& phi);
GroupAut compose(const FiniteGroup& G, const GroupAut& f, const GroupAut& g);  // f after g
GroupAut inverse_aut(const FiniteGroup& G, const GroupAut& f);
GroupAut conjugation_aut(const FiniteGroup& G, int g);

/// Primary decomposition of a finite abelian group: factors (p, k, r) meaning
/// (Z_{p^k})^r, sorted by (p, k), each (p, k) listed once with r >= 1.
struct AbelianDecomposition {
    struct Factor {
        long long p;
        int k;
        int r;
        bool operator==(const Factor&) const = default;
    };
    std::vector<Factor> factors;

    bool operator==(const AbelianDecomposition&) const = default;
    long long total_order() const;
    std::string to_string() const;  // e.g. "Z4 + Z3" or "(Z2)^2"
};

// --- Structural subgroup computations (element sets are sorted index sets) ---

std::vector<int> center(const FiniteGroup& G);
std::vector<int> commutator_subgroup(const FiniteGroup& G);
std::vector<int> subgroup_closure(const FiniteGroup& G, std::vector<int> gens);
std::vector<int> normal_closure(const FiniteGroup& G, const std::vector<int>& seed);
/// A small generating set, chosen greedily by ascending index (deterministic).
std::vector<int> generating_set(const FiniteGroup& G);
bool is_subgroup(const FiniteGroup& G, const std::vector<int>& set);
bool is_normal(const FiniteGroup& G, const std::vector<int>& subgroup);

/// The subgroup as a FiniteGroup of its own (elements reindexed 0..k-1 in
/// ascending order of their ambient index); second result maps new -> ambient.
std::pair<FiniteGroup, std::vector<int>> subgroup_as_group(const FiniteGroup& G,
                                                           const std::vector<int>& members);
/// Quotient by a normal subgroup; coset representatives are least-index,
/// cosets numbered in ascending order of their representative.
FiniteGroup quotient_group(const FiniteGroup& G, const std::vector<int>& normal_subgroup);

AbelianDecomposition decompose_abelian(const FiniteGroup& G);  // G must be abelian
AbelianDecomposition abelianization(const FiniteGroup& G);

struct SylowResult {
    std::vector<int> subgroup;
    bool unique;
};
SylowResult sylow(const FiniteGroup& G, long long p);

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G);

/// Default order cap for generic automorphism enumeration (cyclic groups are
/// special-cased to unit maps at any order).  Raise per call via aut_cap.
constexpr int kDefaultAutCap = 24;

/// Enumerate Aut(G) lazily in a deterministic order; stop when the callback
/// returns false.  No cap is applied here.
void for_each_automorphism(const FiniteGroup& G, const std::function<bool(const GroupAut&)>& fn);
/// Full list; throws CapacityError if the order exceeds aut_cap (cyclic exempt).
std::vector<GroupAut> automorphism_group(const FiniteGroup& G, int aut_cap = kDefaultAutCap);
bool outer_automorphisms_trivial(const FiniteGroup& G, int aut_cap = kDefaultAutCap);

bool is_simple(const FiniteGroup& G);

bool is_prime(long long n);

}  // namespace wreathlab
