#include "wreathlab/dl_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wreathlab {

namespace {

void check_digit_range(const TreeVertex& t, int radix) {
    for (auto [p, d] : t.digits) {
        (void)p;
        if (d < 1 || d >= radix)
            throw ValidationError("digit " + std::to_string(d) + " out of range 1.." +
                                  std::to_string(radix - 1) + " (zeros are omitted)");
    }
}

/// digits with an entry at `pos` replaced by d (d = 0 removes it)
std::vector<std::pair<int, int>> with_digit(const std::vector<std::pair<int, int>>& digits,
                                            int pos, int d) {
    std::vector<std::pair<int, int>> out;
    out.reserve(digits.size() + 1);
    bool placed = false;
    for (auto [p, v] : digits) {
        if (p == pos) continue;
        if (!placed && d != 0 && pos < p) {
            out.emplace_back(pos, d);
            placed = true;
        }
        out.emplace_back(p, v);
    }
    if (!placed && d != 0) out.emplace_back(pos, d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

void validate_vertex(const DLVertex& v, int m, int n) {
    if (v.v1.tag != Tree::T1 || v.v2.tag != Tree::T2)
        throw ValidationError("vertex trees are mistagged");
    if (v.v1.height + v.v2.height != 0)
        throw ValidationError("heights do not sum to zero (h1=" + std::to_string(v.v1.height) +
                              ", h2=" + std::to_string(v.v2.height) + ")");
    check_digit_range(v.v1, m);
    check_digit_range(v.v2, n);
    for (auto [p, d] : v.v1.digits) {
        (void)d;
        if (p > v.v1.height) throw ValidationError("T1 digit above height");
    }
    for (auto [p, d] : v.v2.digits) {
        (void)d;
        if (p < 1 - v.v2.height) throw ValidationError("T2 digit below height window");
    }
}

DLVertex vertex_of_element(const WreathElement& g, int m) {
    int k = g.shift;
    DLVertex v;
    v.v1.tag = Tree::T1;
    v.v1.height = k;
    v.v2.tag = Tree::T2;
    v.v2.height = -k;
    for (auto [p, val] : g.lamps.entries()) {
        if (val < 0 || val >= m) throw ValidationError("lamp value out of digit range");
        if (p <= k)
            v.v1.digits.emplace_back(p, val);
        else
            v.v2.digits.emplace_back(p, val);
    }
    return v;
}

WreathElement element_of_vertex(const DLVertex& v, int m) {
    validate_vertex(v, m, m);
    WreathElement g;
    g.shift = v.v1.height;
    std::vector<std::pair<int, int>> entries = v.v1.digits;
    entries.insert(entries.end(), v.v2.digits.begin(), v.v2.digits.end());
    std::sort(entries.begin(), entries.end());
    g.lamps = LampConfig(entries);
    return g;
}

std::vector<DLVertex> graph_neighbors(const DLVertex& v, int m, int n) {
    std::vector<DLVertex> out;
    out.reserve(m + n);
    int k = v.v1.height;
    for (int d = 0; d < m; ++d) {  // up in T1, parent step in T2
        DLVertex w = v;
        w.v1.height = k + 1;
        w.v1.digits = with_digit(v.v1.digits, k + 1, d);
        w.v2.height = -(k + 1);
        w.v2.digits = with_digit(v.v2.digits, k + 1, 0);
        out.push_back(std::move(w));
    }
    for (int d = 0; d < n; ++d) {  // down in T1, digit choice in T2
        DLVertex w = v;
        w.v1.height = k - 1;
        w.v1.digits = with_digit(v.v1.digits, k, 0);
        w.v2.height = -(k - 1);
        w.v2.digits = with_digit(v.v2.digits, k, d);
        out.push_back(std::move(w));
    }
    return out;
}

std::string vertex_to_string(const DLVertex& v) {
    std::ostringstream os;
    auto emit = [&](const TreeVertex& t) {
        os << t.height << ":[";
        bool first = true;
        for (auto [p, d] : t.digits) {
            if (!first) os << ",";
            first = false;
            os << p << "=" << d;
        }
        os << "]";
    };
    emit(v.v1);
    os << " | ";
    emit(v.v2);
    return os.str();
}

std::vector<int> vertex_key(const DLVertex& v) {
    std::vector<int> k;
    k.push_back(v.v1.height);
    for (auto [p, d] : v.v1.digits) {
        k.push_back(p);
        k.push_back(d);
    }
    k.push_back(INT32_MIN);  // separator
    for (auto [p, d] : v.v2.digits) {
        k.push_back(p);
        k.push_back(d);
    }
    return k;
}

DLBall dl_ball(int m, int n, int radius) {
    DLBall b;
    DLVertex origin;
    origin.v1.tag = Tree::T1;
    origin.v2.tag = Tree::T2;
    WreathIndex seen;
    b.vertices.push_back(origin);
    b.distance.push_back(0);
    b.sphere_sizes.push_back(1);
    seen.emplace(vertex_key(origin), 0);
    size_t layer_begin = 0, layer_end = 1;
    for (int dist = 1; dist <= radius; ++dist) {
        for (size_t i = layer_begin; i < layer_end; ++i)
            for (auto& w : graph_neighbors(b.vertices[i], m, n))
                if (seen.emplace(vertex_key(w), dist).second) {
                    b.vertices.push_back(std::move(w));
                    b.distance.push_back(dist);
                }
        layer_begin = layer_end;
        layer_end = b.vertices.size();
        b.sphere_sizes.push_back(layer_end - layer_begin);
    }
    return b;
}

std::string IsoCheckReport::to_string() const {
    std::ostringstream os;
    os << "cayley-vs-DL(" << m << "," << m << ") radius " << radius << "\n";
    for (size_t r = 0; r < cayley_sphere_sizes.size(); ++r)
        os << "  sphere " << r << ": cayley " << cayley_sphere_sizes[r] << ", graph "
           << (r < graph_sphere_sizes.size() ? graph_sphere_sizes[r] : 0) << "\n";
    os << (pass ? "PASS" : "FAIL: " + failure) << "\n";
    return os.str();
}

IsoCheckReport check_cayley_isomorphism(int m, int radius) {
    return check_cayley_isomorphism(WreathGroup(FiniteGroup::cyclic(m)), radius);
}

IsoCheckReport check_cayley_isomorphism(const WreathGroup& W, int radius) {
    if (W.base().identity() != 0)
        throw ValidationError("DL correspondence assumes element index 0 is the identity");
    int m = W.lamp_order();
    IsoCheckReport rep;
    rep.m = m;
    rep.radius = radius;

    auto cayley = W.ball(GenSet::TA, radius);
    auto graph = dl_ball(m, m, radius);
    rep.cayley_sphere_sizes = cayley.sphere_sizes;
    rep.graph_sphere_sizes = graph.sphere_sizes;

    auto fail = [&](std::string why) {
        rep.pass = false;
        rep.failure = std::move(why);
        return rep;
    };

    if (cayley.sphere_sizes != graph.sphere_sizes) return fail("sphere size mismatch");

    // injectivity of vertex_of_element and distance agreement
    WreathIndex graph_dist;
    for (size_t i = 0; i < graph.vertices.size(); ++i)
        graph_dist.emplace(vertex_key(graph.vertices[i]), graph.distance[i]);
    WreathIndex image_seen;
    for (size_t i = 0; i < cayley.elements.size(); ++i) {
        DLVertex v = vertex_of_element(cayley.elements[i], m);
        auto k = vertex_key(v);
        if (!image_seen.emplace(k, static_cast<int>(i)).second)
            return fail("vertex_of_element is not injective at " +
                        W.to_string(cayley.elements[i]));
        auto it = graph_dist.find(k);
        if (it == graph_dist.end())
            return fail("image vertex " + vertex_to_string(v) + " missing from graph ball");
        if (it->second != cayley.distance[i])
            return fail("distance mismatch at " + vertex_to_string(v));
        // inverse round trip
        if (!(element_of_vertex(v, m) == cayley.elements[i]))
            return fail("element_of_vertex does not invert vertex_of_element at " +
                        vertex_to_string(v));
    }

    // adjacency equivariance and degree on the interior
    for (size_t i = 0; i < cayley.elements.size(); ++i) {
        if (cayley.distance[i] >= radius) break;
        DLVertex v = vertex_of_element(cayley.elements[i], m);
        auto nbrs = graph_neighbors(v, m, m);
        if (static_cast<int>(nbrs.size()) != 2 * m)
            return fail("degree != 2m at " + vertex_to_string(v));
        std::set<std::vector<int>> graph_keys, action_keys;
        for (const auto& w : nbrs) graph_keys.insert(vertex_key(w));
        for (const auto& h : W.action_neighbors(cayley.elements[i]))
            action_keys.insert(vertex_key(vertex_of_element(h, m)));
        if (graph_keys != action_keys)
            return fail("adjacency mismatch at " + vertex_to_string(v));
    }

    rep.pass = true;
    return rep;
}

}  // namespace wreathlab
