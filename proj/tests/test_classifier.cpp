#include <doctest.h>

#include "wreathlab/classifier.hpp"
#include "wreathlab/group_spec.hpp"
#include "wreathlab/suite.hpp"

using namespace wreathlab;

TEST_CASE("frak-A membership") {
    CHECK(in_frak_A(build_group("C4")));
    CHECK(!in_frak_A(build_group("C2xC2")));
    CHECK(!in_frak_A(build_group("C5")));
    CHECK(in_frak_A(build_group("C6")));
    CHECK(in_frak_A(build_group("C2xC4")));   // both 2-power factors have r = 1
    CHECK(!in_frak_A(build_group("C3xC3")));
    CHECK(in_frak_A(build_group("C3xC5")));
    CHECK(!in_frak_A(build_group("C5xC7")));
    CHECK(!in_frak_A(build_group("C1")));
    CHECK_THROWS_AS(in_frak_A(build_group("S3")), std::domain_error);
}

TEST_CASE("classify: spec'd examples") {
    auto c6 = classify(build_group("C6"));
    CHECK(c6.kind == Verdict::Kind::RInf);
    CHECK(c6.certificate->rule == "cyclic-4.1");
    CHECK(c6.fired_rule("abelian-3.7"));
    CHECK(c6.fired_rule("order-2p-5.6"));

    auto c5 = classify(build_group("C5"));
    REQUIRE(c5.kind == Verdict::Kind::NotRInf);
    REQUIRE(c5.witness.has_value());
    CHECK(c5.witness->reidemeister_value == 2);
    CHECK(c5.witness->spec.eps == -1);
    CHECK(c5.witness->spec.xi.image == unit_aut(build_group("C5"), 2).image);

    auto q8 = classify(build_group("Q8"));
    CHECK(q8.kind == Verdict::Kind::RInf);
    CHECK(q8.certificate->rule == "center-5.5");

    auto d6 = classify(build_group("D6"));
    CHECK(d6.kind == Verdict::Kind::RInf);
    CHECK(d6.certificate->rule == "ab-quotient-5.5");
    CHECK(d6.fired_rule("order-2p-5.6"));

    auto s5 = classify(build_group("S5"));
    CHECK(s5.kind == Verdict::Kind::RInf);
    CHECK(s5.fired_rule("symmetric-5.14"));

    auto a6 = classify(build_group("A6"));
    CHECK(a6.kind == Verdict::Kind::Unknown);
    CHECK(!a6.rules_tried.empty());

    auto a5 = classify(build_group("A5"));
    CHECK(a5.kind == Verdict::Kind::RInf);
    CHECK(a5.fired_rule("alternating-5.13"));
}

TEST_CASE("classify: verdicts are deterministic and certificates first-in-order") {
    auto v1 = classify(build_group("D8"));
    auto v2 = classify(build_group("D8"));
    CHECK(v1.certificate->rule == v2.certificate->rule);
    CHECK(v1.certificate->rule == "center-5.5");  // G^ab = (Z2)^2 not in frak-A
    CHECK(v1.fired.size() == v2.fired.size());
}

TEST_CASE("cross validation of the cyclic family") {
    auto rep = cross_validate_cyclic(6);
    CHECK(rep.pass);
    REQUIRE(rep.rows.size() == 5);
    CHECK(rep.rows[0].got_rinf);   // m=2
    CHECK(rep.rows[1].got_rinf);   // m=3
    CHECK(rep.rows[2].got_rinf);   // m=4
    CHECK(!rep.rows[3].got_rinf);  // m=5
    CHECK(rep.rows[3].witness_value == 2);
    CHECK(rep.rows[4].got_rinf);   // m=6

    auto rep30 = cross_validate_cyclic(30);
    CHECK(rep30.pass);

    CHECK_THROWS_AS(cross_validate_cyclic(1), ValidationError);
}

TEST_CASE("divisibility predicate up to 1000") {
    for (int m = 2; m <= 1000; ++m) {
        bool expect = (m % 2 == 0) || (m % 3 == 0);
        Verdict v = classify(FiniteGroup::cyclic(m));
        REQUIRE(v.kind != Verdict::Kind::Unknown);
        bool got = v.kind == Verdict::Kind::RInf;
        REQUIRE(got == expect);
        if (!expect) REQUIRE(v.witness->reidemeister_value == 2);
    }
}

TEST_CASE("biconditional experiment on abelian groups up to order 36") {
    // in frak-A  => the compatible-pair family holds no finite witness;
    // not in frak-A => the witness search succeeds.
    Caps caps;
    caps.aut_cap = 36;
    for (int order = 2; order <= 36; ++order) {
        for (const auto& factors : abelian_factor_lists(order)) {
            std::vector<FiniteGroup> parts;
            for (int q : factors) parts.push_back(FiniteGroup::cyclic(q));
            FiniteGroup G = FiniteGroup::direct_sum(parts);
            bool in_A = in_frak_A(G);
            Verdict v = classify(G, caps);
            if (in_A) {
                CHECK(v.kind == Verdict::Kind::RInf);
            } else {
                // Theorem-level expectation; a failure here would be a finding
                CHECK(v.kind == Verdict::Kind::NotRInf);
            }
        }
    }
}

TEST_CASE("NotRInf witnesses re-verify") {
    for (int m : {5, 7, 25, 35}) {
        Verdict v = classify(FiniteGroup::cyclic(m));
        REQUIRE(v.kind == Verdict::Kind::NotRInf);
        WreathGroup W(FiniteGroup::cyclic(m));
        auto r = reidemeister_wreath(W, v.witness->spec);
        REQUIRE(r.kind == ReidemeisterResult::Kind::Finite);
        CHECK(r.finite.value == v.witness->reidemeister_value);
    }
}

TEST_CASE("capacity-limited groups fall back honestly") {
    // A7 is simple with nontrivial Out; Aut enumeration is capped, the
    // alternating rule still decides it.
    auto a7 = classify(build_group("A7"));
    CHECK(a7.kind == Verdict::Kind::RInf);
    CHECK(a7.fired_rule("alternating-5.13"));
}
