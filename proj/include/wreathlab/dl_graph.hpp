#pragma once

#include <string>
#include <vector>

#include "wreathlab/wreath.hpp"

namespace wreathlab {

// ---------------------------------------------------------------------------
// Diestel-Leader graphs DL(m,n): pairs of vertices from two oriented regular
// trees whose heights sum to zero.  A tree vertex at height h is encoded by
// its nonzero digits: positions p <= h for T1, positions p >= 1-h for T2
// (digit range 0..m-1 resp. 0..n-1, zeros omitted).
// ---------------------------------------------------------------------------

enum class Tree { T1, T2 };

struct TreeVertex {
    Tree tag = Tree::T1;
    int height = 0;
    std::vector<std::pair<int, int>> digits;  // sorted (position, digit != 0)

    bool operator==(const TreeVertex&) const = default;
};

struct DLVertex {
    TreeVertex v1;  // T1
    TreeVertex v2;  // T2

    bool operator==(const DLVertex&) const = default;
};

/// Checks the height/digit-domain invariants; throws ValidationError.
void validate_vertex(const DLVertex& v, int m, int n);

/// Element <-> vertex correspondence for G wr Z with |G| = m: the T1
/// coordinate carries the lamps at positions <= shift, the T2 coordinate the
/// lamps at positions >= shift+1.
DLVertex vertex_of_element(const WreathElement& g, int m);
WreathElement element_of_vertex(const DLVertex& v, int m);

/// The m+n graph neighbors: m up-moves (digit choice at height h1+1 in T1,
/// forced parent step in T2) and n down-moves (parent step in T1, digit
/// choice in T2).
std::vector<DLVertex> graph_neighbors(const DLVertex& v, int m, int n);

/// Canonical string `h1:[p=d,...] | h2:[p=d,...]`.
std::string vertex_to_string(const DLVertex& v);
std::vector<int> vertex_key(const DLVertex& v);

struct DLBall {
    std::vector<DLVertex> vertices;    // BFS discovery order from (x0, y0)
    std::vector<int> distance;
    std::vector<size_t> sphere_sizes;  // per radius
};
DLBall dl_ball(int m, int n, int radius);

struct IsoCheckReport {
    int m = 0;
    int radius = 0;
    std::vector<size_t> cayley_sphere_sizes;
    std::vector<size_t> graph_sphere_sizes;
    bool pass = false;
    std::string failure;  // empty when pass

    std::string to_string() const;
};

/// Falsifiable check that the TA Cayley graph of (Z_m or any order-m G) wr Z
/// matches the DL(m,m) graph model on the radius ball: bijectivity of
/// vertex_of_element, sphere counts, degree 2m, and adjacency equivariance.
IsoCheckReport check_cayley_isomorphism(int m, int radius);
IsoCheckReport check_cayley_isomorphism(const WreathGroup& W, int radius);

}  // namespace wreathlab
