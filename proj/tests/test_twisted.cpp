#include <doctest.h>

#include "wreathlab/group_spec.hpp"
#include "wreathlab/twisted.hpp"

using namespace wreathlab;

TEST_CASE("twisted classes by orbit enumeration") {
    auto C4 = build_group("C4");
    auto r = twisted_classes(C4, identity_aut(C4));
    CHECK(r.count == 4);  // ordinary conjugacy classes of an abelian group
    CHECK(r.representatives == std::vector<int>{0, 1, 2, 3});

    auto C5 = build_group("C5");
    CHECK(twisted_classes(C5, unit_aut(C5, 2)).count == 1);

    // swap on C3+C3 has 3 classes
    auto G = build_group("C3xC3");
    GroupAut swap;
    swap.image.resize(9);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) swap.image[x * 3 + y] = y * 3 + x;
    CHECK(twisted_classes(G, swap).count == 3);

    GroupAut bad;
    bad.image = {0, 1, 1, 3};
    CHECK_THROWS_AS(twisted_classes(C4, bad), ValidationError);
}

TEST_CASE("cokernel route on abelian groups") {
    auto C7 = build_group("C7");
    CHECK(reidemeister_abelian(C7, identity_aut(C7)) == 7);
    auto C5 = build_group("C5");
    CHECK(reidemeister_abelian(C5, unit_aut(C5, 2)) == 1);
    auto V4 = build_group("C2xC2");
    GroupAut swap;
    swap.image = {0, 2, 1, 3};
    CHECK(reidemeister_abelian(V4, swap) == 2);
    CHECK_THROWS_AS(reidemeister_abelian(build_group("S3"), identity_aut(build_group("S3"))),
                    std::domain_error);
}

TEST_CASE("fixed-class route") {
    auto S3 = build_group("S3");
    CHECK(reidemeister_fh(S3, identity_aut(S3)) == 3);
    auto C4 = build_group("C4");
    CHECK(reidemeister_fh(C4, identity_aut(C4)) == 4);
    auto Q8 = build_group("Q8");
    for (int g = 0; g < Q8.order(); ++g)
        CHECK(reidemeister_fh(Q8, conjugation_aut(Q8, g)) == 5);
}

TEST_CASE("three-route agreement on small groups") {
    for (const char* spec : {"C2", "C6", "C8", "C2xC4", "C3xC3", "C2xC2xC2"}) {
        auto G = build_group(spec);
        for (const auto& phi : automorphism_group(G)) {
            auto orbit = twisted_classes(G, phi).count;
            CHECK(orbit == reidemeister_abelian(G, phi));
            CHECK(orbit == reidemeister_fh(G, phi));
        }
    }
    for (const char* spec : {"S3", "D8", "Q8", "A4"}) {
        auto G = build_group(spec);
        for (const auto& phi : automorphism_group(G))
            CHECK(twisted_classes(G, phi).count == reidemeister_fh(G, phi));
    }
}

TEST_CASE("block class counts") {
    WreathGroup W2(FiniteGroup::cyclic(2));
    auto s2 = make_autospec(W2, identity_aut(W2.base()), 0, -1);
    CHECK(block_class_count(W2, s2, 1) == 2);

    WreathGroup W5(FiniteGroup::cyclic(5));
    auto s5 = make_autospec(W5, unit_aut(W5.base(), 2), 0, -1);
    CHECK(block_class_count(W5, s5, 1) == 1);

    WreathGroup W3(FiniteGroup::cyclic(3));
    auto s3 = make_autospec(W3, unit_aut(W3.base(), 2), 0, -1);
    CHECK(block_class_count(W3, s3, 1) == 3);

    // orbit route agrees with the cokernel route on abelian carriers
    for (int n : {2, 3, 4, 5, 6}) {
        WreathGroup W(FiniteGroup::cyclic(n));
        for (const auto& xi : automorphism_group(W.base())) {
            auto s = make_autospec(W, xi, 0, -1);
            for (int i : {0, 1, 2})
                CHECK(block_class_count(W, s, i) == block_class_count_orbit(W, s, i));
        }
    }

    // nonabelian base: orbit enumeration drives the count
    WreathGroup WQ(FiniteGroup::quaternion8());
    auto sq = make_autospec(WQ, identity_aut(WQ.base()), 0, -1);
    CHECK(block_class_count(WQ, sq, 1) == block_class_count_orbit(WQ, sq, 1));

    CHECK_THROWS_AS(block_class_count(W2, make_autospec(W2, identity_aut(W2.base()), 0, +1), 1),
                    std::domain_error);
}

TEST_CASE("fixed point implies non-invertibility") {
    // whenever a pair block has a nontrivial fixed point, its class count >= 2
    for (int n : {2, 3, 4, 6, 9}) {
        WreathGroup W(FiniteGroup::cyclic(n));
        for (const auto& xi : automorphism_group(W.base())) {
            auto s = make_autospec(W, xi, 0, -1);
            if (block_fixed_points(W, s, 1).size() > 1) CHECK(block_class_count(W, s, 1) >= 2);
        }
    }
}

TEST_CASE("translation invariance of pair blocks") {
    WreathGroup W(FiniteGroup::cyclic(6));
    for (const auto& xi : automorphism_group(W.base()))
        for (int c : {0, 1}) {
            auto s = make_autospec(W, xi, c, -1);
            long long first = -1;
            for (int i : {c + 1, c + 2, c + 5, c - 4}) {
                if (2 * i == c) continue;
                long long cnt = block_class_count(W, s, i);
                if (first < 0) first = cnt;
                CHECK(cnt == first);
            }
        }
}

TEST_CASE("window counts") {
    WreathGroup W2(FiniteGroup::cyclic(2));
    auto s2 = make_autospec(W2, identity_aut(W2.base()), 0, -1);
    CHECK(window_class_count(W2, s2, {}) == 1);
    CHECK(window_class_count(W2, s2, {1, 2}) == 4);
    CHECK(window_direct_count(W2, s2, {1, 2}) == 4);
    // block ids collapse duplicates: {1, -1} is one block
    CHECK(window_class_count(W2, s2, {1, -1}) == 2);

    WreathGroup W5(FiniteGroup::cyclic(5));
    auto s5 = make_autospec(W5, unit_aut(W5.base(), 2), 0, -1);
    CHECK(window_class_count(W5, s5, {0, 1, 2}) == 1);
    CHECK(window_direct_count(W5, s5, {0, 1, 2}) == 1);

    CHECK_THROWS_AS(window_direct_count(W5, s5, {0, 1, 2, 3, 4, 5}, 10'000), CapacityError);
}

TEST_CASE("wreath Reidemeister numbers") {
    WreathGroup W2(FiniteGroup::cyclic(2));
    auto r_inf = reidemeister_wreath(W2, make_autospec(W2, identity_aut(W2.base()), 0, -1));
    CHECK(r_inf.kind == ReidemeisterResult::Kind::InfiniteCertified);
    CHECK(r_inf.infinite.rule == "pair-block");
    CHECK(r_inf.infinite.block_count == 2);

    WreathGroup W5(FiniteGroup::cyclic(5));
    auto r_fin = reidemeister_wreath(W5, make_autospec(W5, unit_aut(W5.base(), 2), 0, -1));
    CHECK(r_fin.kind == ReidemeisterResult::Kind::Finite);
    CHECK(r_fin.finite.value == 2);
    CHECK(r_fin.finite.r_phi_prime == 1);
    CHECK(r_fin.finite.r_t_twist == 1);

    // eps = +1 is always infinite, for any xi and offset
    for (int c : {0, 5}) {
        auto r = reidemeister_wreath(W5, make_autospec(W5, unit_aut(W5.base(), 3), c, +1));
        CHECK(r.kind == ReidemeisterResult::Kind::InfiniteCertified);
        CHECK(r.infinite.rule == "identity-on-Z");
    }

    // offset parity moves the middle block to the t-twist side; value unchanged
    auto r_c1 = reidemeister_wreath(W5, make_autospec(W5, unit_aut(W5.base(), 2), 1, -1));
    CHECK(r_c1.kind == ReidemeisterResult::Kind::Finite);
    CHECK(r_c1.finite.value == 2);
    CHECK(r_c1.finite.r_phi_prime == 1);

    // 3 | 9: every unit spec on L9 hits a pair block with >= 2 classes
    WreathGroup W9(FiniteGroup::cyclic(9));
    for (const auto& xi : automorphism_group(W9.base())) {
        auto r9 = reidemeister_wreath(W9, make_autospec(W9, xi, 0, -1));
        REQUIRE(r9.kind == ReidemeisterResult::Kind::InfiniteCertified);
        CHECK(r9.infinite.block_count >= 2);
    }
}
