#include <doctest.h>

#include <set>

#include "wreathlab/group_spec.hpp"
#include "wreathlab/wreath_aut.hpp"

using namespace wreathlab;

namespace {

WreathElement elem(std::vector<std::pair<int, int>> lamps, int shift) {
    WreathElement g;
    g.lamps = LampConfig(std::move(lamps));
    g.shift = shift;
    return g;
}

}  // namespace

TEST_CASE("autospec construction and application") {
    WreathGroup W5(FiniteGroup::cyclic(5));
    auto id_spec = make_autospec(W5, identity_aut(W5.base()), 0, +1);
    auto g = elem({{-1, 2}, {3, 4}}, 2);
    CHECK(apply_aut(W5, id_spec, g) == g);

    // the gcd(n,6)=1 witness: x -> 2x, c = 0, eps = -1
    auto s = make_autospec(W5, unit_aut(W5.base(), 2), 0, -1);
    CHECK(apply_aut(W5, s, W5.identity_element()).is_identity());
    // a_1 -> a_{-1}^2
    CHECK(apply_aut(W5, s, elem({{1, 1}}, 0)) == elem({{-1, 2}}, 0));
    // t -> t^-1
    CHECK(apply_aut(W5, s, W5.t_power(1)) == W5.t_power(-1));
    // phi'(a_0) = a_c^k
    auto s_c3 = make_autospec(W5, unit_aut(W5.base(), 2), 3, -1);
    CHECK(apply_aut(W5, s_c3, elem({{0, 1}}, 0)) == elem({{3, 2}}, 0));

    // mirror map with xi = id on C2 is a valid spec
    WreathGroup W2(FiniteGroup::cyclic(2));
    CHECK_NOTHROW(make_autospec(W2, identity_aut(W2.base()), 0, -1));

    // invalid xi rejected
    GroupAut bad;
    bad.image = {1, 2, 0, 3, 4};  // not a homomorphism of C5
    CHECK_THROWS_AS(make_autospec(W5, bad, 0, -1), ValidationError);
    CHECK_THROWS_AS(make_autospec(W5, identity_aut(W5.base()), 0, 2), ValidationError);
}

TEST_CASE("autospec parsing") {
    WreathGroup W5(FiniteGroup::cyclic(5));
    auto s = parse_autospec(W5, "xi=*2 c=0 eps=-1");
    CHECK(s.xi.image == std::vector<int>{0, 2, 4, 1, 3});
    CHECK(s.offset == 0);
    CHECK(s.eps == -1);
    auto s2 = parse_autospec(W5, "xi=1 c=3 eps=+1");  // index 1 in Aut list = *2
    CHECK(s2.xi.image == std::vector<int>{0, 2, 4, 1, 3});
    CHECK(s2.offset == 3);
    CHECK_THROWS_AS(parse_autospec(W5, "xi=*2 c=0"), ValidationError);
    CHECK_THROWS_AS(parse_autospec(W5, "xi=*2 c=0 eps=3"), ValidationError);
    CHECK_THROWS_AS(parse_autospec(W5, "xi=99 c=0 eps=-1"), ValidationError);
}

TEST_CASE("apply_aut is a homomorphism and bijection on balls") {
    WreathGroup W(FiniteGroup::cyclic(3));
    auto ball = W.ball(GenSet::TA, 5);
    for (const auto& s : {make_autospec(W, unit_aut(W.base(), 2), 0, -1),
                          make_autospec(W, unit_aut(W.base(), 2), 1, +1)}) {
        std::set<std::vector<int>> images;
        for (const auto& g : ball.elements)
            CHECK(images.insert(WreathGroup::key(apply_aut(W, s, g))).second);
        CHECK(images.size() == ball.elements.size());
        // products preserved on a deterministic sample of pairs
        for (size_t i = 0; i < ball.elements.size(); i += 7)
            for (size_t j = 1; j < ball.elements.size(); j += 11) {
                const auto& x = ball.elements[i];
                const auto& y = ball.elements[j];
                CHECK(apply_aut(W, s, W.mul(x, y)) ==
                      W.mul(apply_aut(W, s, x), apply_aut(W, s, y)));
            }
    }
}

TEST_CASE("composition law for specs") {
    WreathGroup W(FiniteGroup::cyclic(5));
    auto s1 = make_autospec(W, unit_aut(W.base(), 2), 1, -1);
    auto s2 = make_autospec(W, unit_aut(W.base(), 3), 2, -1);
    // s2 after s1 = (xi2 xi1, c2 + eps2*c1, eps1*eps2)
    auto comp = make_autospec(W, compose(W.base(), s2.xi, s1.xi),
                              s2.offset + s2.eps * s1.offset, s1.eps * s2.eps);
    for (const auto& g : W.ball(GenSet::TA, 4).elements)
        CHECK(apply_aut(W, s2, apply_aut(W, s1, g)) == apply_aut(W, comp, g));
}

TEST_CASE("blocks partition the lamp positions") {
    WreathGroup W(FiniteGroup::cyclic(5));
    for (int c : {0, 1, 4, -3}) {
        auto s = make_autospec(W, unit_aut(W.base(), 2), c, -1);
        std::set<int> ids;
        int middles = 0;
        for (int i = -6; i <= 6; ++i) {
            auto b = block_map(W, s, i);
            CHECK(b.partner == c - i);
            ids.insert(block_id(s, i));
            if (b.kind == BlockKind::Middle) {
                ++middles;
                CHECK(2 * i == c);
            }
        }
        CHECK(middles == (c % 2 == 0 ? 1 : 0));
        // every position lies in exactly one block
        std::set<int> covered;
        for (int id : ids) {
            covered.insert(id);
            covered.insert(c - id);
        }
        for (int i = -6; i <= 6; ++i) CHECK(covered.count(i) == 1);
    }
    // no blocks for eps = +1
    auto s_plus = make_autospec(W, identity_aut(W.base()), 0, +1);
    CHECK_THROWS_AS(block_map(W, s_plus, 1), std::domain_error);
}

TEST_CASE("block maps") {
    WreathGroup W2(FiniteGroup::cyclic(2));
    auto swap2 = block_map(W2, make_autospec(W2, identity_aut(W2.base()), 0, -1), 1);
    CHECK(swap2.kind == BlockKind::Pair);
    // (x,y) -> (y,x) on Z2+Z2, carrier indexed x*2+y
    CHECK(swap2.map(W2.base(), 0b01) == 0b10);
    CHECK(swap2.map(W2.base(), 0b11) == 0b11);

    WreathGroup W5(FiniteGroup::cyclic(5));
    auto s5 = make_autospec(W5, unit_aut(W5.base(), 2), 0, -1);
    auto mid = block_map(W5, s5, 0);
    CHECK(mid.kind == BlockKind::Middle);
    CHECK(mid.map(W5.base(), 3) == 1);  // x -> 2x mod 5
    auto pair = block_map(W5, s5, 3);
    CHECK(pair.kind == BlockKind::Pair);
    // (x,y) -> (2y, 2x): (1,0) -> (0,2)
    CHECK(pair.map(W5.base(), 1 * 5 + 0) == 0 * 5 + 2);
}

TEST_CASE("block fixed points") {
    WreathGroup W2(FiniteGroup::cyclic(2));
    auto s2 = make_autospec(W2, identity_aut(W2.base()), 0, -1);
    CHECK(block_fixed_points(W2, s2, 1) == std::vector<long long>{0, 3});  // (0,0),(1,1)

    WreathGroup W3(FiniteGroup::cyclic(3));
    auto s3 = make_autospec(W3, unit_aut(W3.base(), 2), 0, -1);
    // y=2x and x=2y => 3x=0: all of Z3 -> (0,0),(1,2),(2,1)
    CHECK(block_fixed_points(W3, s3, 1) == std::vector<long long>{0, 1 * 3 + 2, 2 * 3 + 1});

    WreathGroup W5(FiniteGroup::cyclic(5));
    auto s5 = make_autospec(W5, unit_aut(W5.base(), 2), 0, -1);
    CHECK(block_fixed_points(W5, s5, 1) == std::vector<long long>{0});
}

TEST_CASE("subgroup membership tags") {
    WreathGroup W4(FiniteGroup::cyclic(4));
    for (auto tag : {CharSubgroupTag::lamp_base(), CharSubgroupTag::commutator_lamps(),
                     CharSubgroupTag::center_wreath(), CharSubgroupTag::order_subgroup(2)})
        CHECK(is_member(W4, W4.identity_element(), tag));

    // tau^2 generates the order-2 subgroup of Z4
    CHECK(is_member(W4, elem({{0, 2}}, 0), CharSubgroupTag::order_subgroup(2)));
    CHECK(!is_member(W4, elem({{0, 1}}, 0), CharSubgroupTag::order_subgroup(2)));
    CHECK(is_member(W4, elem({{0, 2}}, 3), CharSubgroupTag::order_subgroup(2)));  // t allowed

    CHECK(is_member(W4, elem({{0, 1}}, 0), CharSubgroupTag::lamp_base()));
    CHECK(!is_member(W4, elem({{0, 1}}, 1), CharSubgroupTag::lamp_base()));

    CHECK_THROWS_AS(is_member(W4, W4.identity_element(), CharSubgroupTag::order_subgroup(3)),
                    ValidationError);

    WreathGroup WQ(FiniteGroup::quaternion8());
    CHECK(is_member(WQ, elem({{2, 1}}, 5), CharSubgroupTag::center_wreath()));  // -1 lamps
    CHECK(!is_member(WQ, elem({{2, 2}}, 0), CharSubgroupTag::center_wreath()));  // i is not central
    CHECK(is_member(WQ, elem({{0, 1}}, 0), CharSubgroupTag::commutator_lamps()));
    CHECK(!is_member(WQ, elem({{0, 1}}, 1), CharSubgroupTag::commutator_lamps()));
    // unique Sylow-2 of C12 wr Z
    WreathGroup W12(FiniteGroup::cyclic(12));
    CHECK(is_member(W12, elem({{0, 3}}, 2), CharSubgroupTag::sylow_wreath(2)));
    CHECK(!is_member(W12, elem({{0, 2}}, 0), CharSubgroupTag::sylow_wreath(2)));
    // S4 has no unique Sylow-2
    WreathGroup WS4(FiniteGroup::symmetric(4));
    CHECK_THROWS_AS(is_member(WS4, WS4.identity_element(), CharSubgroupTag::sylow_wreath(2)),
                    ValidationError);
}

TEST_CASE("verify_characteristic") {
    WreathGroup W4(FiniteGroup::cyclic(4));
    auto specs = all_compatible_specs(W4);
    CHECK(specs.size() == 8);  // 2 units x 2 offsets x 2 signs
    auto rep = verify_characteristic(W4, CharSubgroupTag::lamp_base(), specs, 4);
    CHECK(rep.pass);
    CHECK(rep.members_checked > 0);
    auto rep2 = verify_characteristic(W4, CharSubgroupTag::order_subgroup(2), specs, 4);
    CHECK(rep2.pass);

    WreathGroup WQ(FiniteGroup::quaternion8());
    auto repq = verify_characteristic(WQ, CharSubgroupTag::center_wreath(),
                                      all_compatible_specs(WQ), 3);
    CHECK(repq.pass);
    CHECK(repq.members_checked > 0);
}
