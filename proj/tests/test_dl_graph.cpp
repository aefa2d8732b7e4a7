#include <doctest.h>

#include <set>

#include "wreathlab/dl_graph.hpp"

using namespace wreathlab;

namespace {

WreathElement elem(std::vector<std::pair<int, int>> lamps, int shift) {
    WreathElement g;
    g.lamps = LampConfig(std::move(lamps));
    g.shift = shift;
    return g;
}

}  // namespace

TEST_CASE("element location in the two trees") {
    // identity -> (x0, y0)
    auto v = vertex_of_element(WreathElement{}, 3);
    CHECK(v.v1.height == 0);
    CHECK(v.v2.height == 0);
    CHECK(v.v1.digits.empty());
    CHECK(v.v2.digits.empty());

    // a: lamp at 0 belongs to T1, T2 coordinate stays y0
    auto va = vertex_of_element(elem({{0, 1}}, 0), 3);
    CHECK(va.v1.digits == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(va.v2.digits.empty());

    // a_1: lamp at 1 belongs to T2, T1 coordinate stays x0
    auto va1 = vertex_of_element(elem({{1, 1}}, 0), 3);
    CHECK(va1.v1.digits.empty());
    CHECK(va1.v2.digits == std::vector<std::pair<int, int>>{{1, 1}});

    // a^2 = (x2, y0)
    auto va2 = vertex_of_element(elem({{0, 2}}, 0), 3);
    CHECK(va2.v1.digits == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(va2.v2.digits.empty());

    CHECK(vertex_to_string(v) == "0:[] | 0:[]");
    CHECK(vertex_to_string(va2) == "0:[0=2] | 0:[]");
}

TEST_CASE("element/vertex round trips") {
    // (x0,y0) -> identity
    DLVertex origin;
    origin.v2.tag = Tree::T2;
    CHECK(element_of_vertex(origin, 3).is_identity());
    // pure shift
    DLVertex vt;
    vt.v1 = {Tree::T1, 1, {}};
    vt.v2 = {Tree::T2, -1, {}};
    CHECK(element_of_vertex(vt, 2) == elem({}, 1));
    // a^2 worked example
    DLVertex va2;
    va2.v1 = {Tree::T1, 0, {{0, 2}}};
    va2.v2 = {Tree::T2, 0, {}};
    CHECK(element_of_vertex(va2, 3) == elem({{0, 2}}, 0));

    // malformed vertices are rejected
    DLVertex bad1;
    bad1.v1 = {Tree::T1, 0, {}};
    bad1.v2 = {Tree::T2, 1, {}};
    CHECK_THROWS_AS(element_of_vertex(bad1, 2), ValidationError);  // heights
    DLVertex bad2;
    bad2.v1 = {Tree::T1, 0, {{1, 1}}};  // digit above height
    bad2.v2 = {Tree::T2, 0, {}};
    CHECK_THROWS_AS(element_of_vertex(bad2, 2), ValidationError);
    DLVertex bad3;
    bad3.v1 = {Tree::T1, 0, {}};
    bad3.v2 = {Tree::T2, 0, {{0, 1}}};  // digit below the T2 window
    CHECK_THROWS_AS(element_of_vertex(bad3, 2), ValidationError);
    DLVertex bad4;
    bad4.v1 = {Tree::T1, 0, {{0, 3}}};  // digit out of range
    bad4.v2 = {Tree::T2, 0, {}};
    CHECK_THROWS_AS(element_of_vertex(bad4, 3), ValidationError);

    // bijectivity on the radius-6 ball
    for (int m : {2, 3}) {
        WreathGroup W(FiniteGroup::cyclic(m));
        auto ball = W.ball(GenSet::TA, 6);
        std::set<std::vector<int>> images;
        for (const auto& g : ball.elements) {
            auto v = vertex_of_element(g, m);
            CHECK(images.insert(vertex_key(v)).second);
            CHECK(element_of_vertex(v, m) == g);
        }
    }
}

TEST_CASE("graph neighbors") {
    DLVertex origin;
    origin.v2.tag = Tree::T2;
    // DL(3,3): 6 neighbors; DL(2,2): 4
    CHECK(graph_neighbors(origin, 3, 3).size() == 6);
    CHECK(graph_neighbors(origin, 2, 2).size() == 4);
    // up-moves from the origin in DL(2,2): digit 0 or 1 at position 1
    auto nbrs = graph_neighbors(origin, 2, 2);
    std::set<std::string> texts;
    for (const auto& w : nbrs) texts.insert(vertex_to_string(w));
    CHECK(texts.count("1:[] | -1:[]") == 1);
    CHECK(texts.count("1:[1=1] | -1:[]") == 1);
    // all neighbor pairs stay on the h1+h2=0 surface and are distinct
    CHECK(texts.size() == 4);
    for (const auto& w : nbrs) CHECK(w.v1.height + w.v2.height == 0);

    // mixed-degree graph DL(2,3)
    CHECK(graph_neighbors(origin, 2, 3).size() == 5);

    // degree regularity over a ball
    auto ball = dl_ball(3, 3, 4);
    for (const auto& v : ball.vertices) {
        auto nn = graph_neighbors(v, 3, 3);
        std::set<std::vector<int>> keys;
        for (const auto& w : nn) keys.insert(vertex_key(w));
        CHECK(keys.size() == 6);
    }
}

TEST_CASE("action neighbors") {
    WreathGroup W2(FiniteGroup::cyclic(2));
    auto nbrs = W2.action_neighbors(W2.identity_element());
    CHECK(nbrs.size() == 4);
    std::set<std::vector<int>> keys;
    for (const auto& g : nbrs) keys.insert(WreathGroup::key(g));
    CHECK(keys.size() == 4);
    CHECK(keys.count(WreathGroup::key(W2.t_power(1))) == 1);
    CHECK(keys.count(WreathGroup::key(W2.t_power(-1))) == 1);

    // |action_neighbors| = 2m on a whole ball
    WreathGroup W3(FiniteGroup::cyclic(3));
    for (const auto& g : W3.ball(GenSet::TA, 3).elements) {
        std::set<std::vector<int>> k;
        for (const auto& h : W3.action_neighbors(g)) k.insert(WreathGroup::key(h));
        CHECK(k.size() == 6);
    }

    // a = t^-1 (ta): a is an action neighbor of t^-1
    auto a = W3.lamp(0, 1);
    bool found = false;
    for (const auto& h : W3.action_neighbors(W3.t_power(-1)))
        if (h == a) found = true;
    CHECK(found);
}

TEST_CASE("adjacency equivariance on balls") {
    for (int m : {2, 3}) {
        WreathGroup W(FiniteGroup::cyclic(m));
        auto ball = W.ball(GenSet::TA, 5);
        for (const auto& g : ball.elements) {
            std::set<std::vector<int>> via_action, via_graph;
            for (const auto& h : W.action_neighbors(g))
                via_action.insert(vertex_key(vertex_of_element(h, m)));
            for (const auto& w : graph_neighbors(vertex_of_element(g, m), m, m))
                via_graph.insert(vertex_key(w));
            REQUIRE(via_action == via_graph);
        }
    }
}

TEST_CASE("cayley isomorphism check") {
    auto r0 = check_cayley_isomorphism(2, 0);
    CHECK(r0.pass);
    CHECK(r0.cayley_sphere_sizes == std::vector<size_t>{1});
    auto r2 = check_cayley_isomorphism(2, 4);
    CHECK(r2.pass);
    auto r3 = check_cayley_isomorphism(3, 3);
    CHECK(r3.pass);
    // the correspondence also holds over a non-cyclic base of order 4
    auto W = WreathGroup(FiniteGroup::direct_sum(
        {FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)}));
    CHECK(check_cayley_isomorphism(W, 3).pass);
}
