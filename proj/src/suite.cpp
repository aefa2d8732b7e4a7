#include "wreathlab/suite.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "wreathlab/classifier.hpp"
#include "wreathlab/dl_graph.hpp"
#include "wreathlab/group_spec.hpp"
#include "wreathlab/normal_form.hpp"

namespace wreathlab {

namespace {

struct Check {
    bool pass = true;
    long long checked = 0;
    std::string first_failure;

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++checked;
        if (!ok && pass) {
            pass = false;
            first_failure = describe();
        } else if (!ok) {
            pass = false;
        }
    }
    CriterionResult result(int number, std::string title) const {
        CriterionResult r;
        r.number = number;
        r.title = std::move(title);
        r.pass = pass;
        r.detail = pass ? std::to_string(checked) + " checks"
                        : first_failure;
        return r;
    }
};

// 1. word_length_ct == word_length_bfs on the radius-7 ball of L2 ({a,t})
//    and the radius-6 ball of L3.
CriterionResult criterion_metric_agreement() {
    Check c;
    for (auto [n, radius] : {std::pair{2, 7}, std::pair{3, 6}}) {
        WreathGroup W(FiniteGroup::cyclic(n));
        auto ball = W.ball(GenSet::AT, radius);
        for (size_t i = 0; i < ball.elements.size(); ++i) {
            int expect = ball.distance[i];
            int got = word_length_ct(W, ball.elements[i]);
            c.expect(got == expect, [&, n_ = n] {
                return "L" + std::to_string(n_) + " element " + W.to_string(ball.elements[i]) +
                       ": formula " + std::to_string(got) + " != BFS " + std::to_string(expect);
            });
        }
    }
    return c.result(1, "word-metric agreement (L2 radius 7, L3 radius 6)");
}

// 2. check_cayley_isomorphism passes for m in {2,3}, radius 4 (degree 2m
//    verified inside the check).
CriterionResult criterion_cayley_dl() {
    Check c;
    for (int m : {2, 3}) {
        auto rep = check_cayley_isomorphism(m, 4);
        c.expect(rep.pass, [&] { return "m=" + std::to_string(m) + ": " + rep.failure; });
    }
    return c.result(2, "Cayley graph = DL(m,m) for m in {2,3}, radius 4");
}

// 3. orbit = cokernel = fixed-class counts on all abelian |G| <= 16;
//    orbit = fixed-class on the non-abelian catalog |G| <= 24.
CriterionResult criterion_method_agreement() {
    Check c;
    for (int order = 2; order <= 16; ++order) {
        for (const auto& factors : abelian_factor_lists(order)) {
            std::vector<FiniteGroup> parts;
            for (int q : factors) parts.push_back(FiniteGroup::cyclic(q));
            FiniteGroup G = FiniteGroup::direct_sum(parts);
            std::vector<GroupAut> auts;
            for_each_automorphism(G, [&](const GroupAut& a) {
                auts.push_back(a);
                return true;
            });
            for (const auto& phi : auts) {
                long long orbit = twisted_classes(G, phi).count;
                long long coker = reidemeister_abelian(G, phi);
                long long fh = reidemeister_fh(G, phi);
                c.expect(orbit == coker && coker == fh, [&] {
                    return G.name() + ": orbit " + std::to_string(orbit) + ", coker " +
                           std::to_string(coker) + ", fh " + std::to_string(fh);
                });
            }
        }
    }
    std::vector<FiniteGroup> catalog;
    for (int n = 6; n <= 24; n += 2) catalog.push_back(FiniteGroup::dihedral(n));
    catalog.push_back(FiniteGroup::quaternion8());
    catalog.push_back(FiniteGroup::symmetric(3));
    catalog.push_back(FiniteGroup::symmetric(4));
    catalog.push_back(FiniteGroup::alternating(4));
    for (const auto& G : catalog) {
        for (const auto& phi : automorphism_group(G)) {
            long long orbit = twisted_classes(G, phi).count;
            long long fh = reidemeister_fh(G, phi);
            c.expect(orbit == fh, [&] {
                return G.name() + ": orbit " + std::to_string(orbit) + " != fh " +
                       std::to_string(fh);
            });
        }
    }
    return c.result(3, "Reidemeister method agreement (abelian <= 16, catalog <= 24)");
}

// 4. cross_validate_cyclic(30): RInf iff 2|m or 3|m, witnesses have value 2;
//    for m in {2,3} window class counts over 1..4 pair blocks strictly grow
//    (2^B for m=2).
CriterionResult criterion_cyclic_theorem() {
    Check c;
    auto rep = cross_validate_cyclic(30);
    c.expect(rep.pass, [&] { return "cross-validation failed:\n" + rep.to_string(); });
    for (const auto& row : rep.rows)
        if (!row.got_rinf)
            c.expect(row.witness_value == 2, [&] {
                return "m=" + std::to_string(row.m) + ": witness value " +
                       std::to_string(row.witness_value) + " != 2";
            });
    for (int m : {2, 3}) {
        WreathGroup W(FiniteGroup::cyclic(m));
        for (const auto& xi : automorphism_group(W.base())) {
            LampAutSpec s = make_autospec(W, xi, 0, -1);
            long long prev = 0;
            for (int b = 1; b <= 4; ++b) {
                std::vector<int> window;
                for (int i = 1; i <= b; ++i) window.push_back(i);
                long long count = window_class_count(W, s, window);
                c.expect(count > prev, [&] {
                    return "m=" + std::to_string(m) + " window 1.." + std::to_string(b) +
                           ": count " + std::to_string(count) + " not increasing";
                });
                if (m == 2) {
                    long long expect = 1;
                    for (int i = 0; i < b; ++i) expect *= 2;
                    c.expect(count == expect, [&] {
                        return "m=2 window 1.." + std::to_string(b) + ": count " +
                               std::to_string(count) + " != 2^" + std::to_string(b);
                    });
                }
                prev = count;
            }
        }
    }
    return c.result(4, "cyclic classification (limit 30) with window growth at m in {2,3}");
}

// 5. every pair block map of every unit spec on L2/L3 has a nontrivial fixed
//    point.
CriterionResult criterion_fixed_points() {
    Check c;
    for (int n : {2, 3}) {
        WreathGroup W(FiniteGroup::cyclic(n));
        for (const auto& xi : automorphism_group(W.base()))
            for (int offset : {0, 1}) {
                LampAutSpec s = make_autospec(W, xi, offset, -1);
                for (int i : {offset + 1, offset + 2, offset - 3}) {
                    if (2 * i == offset) continue;  // middle block, not a pair
                    auto fixed = block_fixed_points(W, s, i);
                    c.expect(fixed.size() >= 2, [&] {
                        return "n=" + std::to_string(n) + " spec " + s.to_string() + " block " +
                               std::to_string(i) + ": only trivial fixed point";
                    });
                }
            }
    }
    return c.result(5, "pair blocks of L2/L3 specs have nontrivial fixed points");
}

// 6. catalog verdicts with the cited certificates.
CriterionResult criterion_catalog_verdicts() {
    Check c;
    auto expect_rule = [&](const std::string& spec, const std::string& rule) {
        Verdict v = classify(build_group(spec));
        c.expect(v.kind == Verdict::Kind::RInf && v.fired_rule(rule), [&] {
            return spec + ": expected RInf via " + rule + ", got " + v.to_string();
        });
    };
    expect_rule("D6", "ab-quotient-5.5");
    expect_rule("D8", "center-5.5");
    expect_rule("D12", "center-5.5");
    expect_rule("Q8", "center-5.5");
    expect_rule("S5", "symmetric-5.14");
    expect_rule("S6", "symmetric-5.14");
    expect_rule("S7", "symmetric-5.14");
    for (int p : {3, 5, 7, 11}) {
        expect_rule("C" + std::to_string(2 * p), "order-2p-5.6");
        expect_rule("D" + std::to_string(2 * p), "order-2p-5.6");
    }
    {
        Verdict v = classify(FiniteGroup::alternating(5));
        bool cited = v.fired_rule("alternating-5.13") || v.fired_rule("simple-outer-5.12");
        c.expect(v.kind == Verdict::Kind::RInf && cited,
                 [&] { return "A5: expected RInf via alternating/simple-outer, got " + v.to_string(); });
    }
    {
        Verdict v = classify(FiniteGroup::alternating(6));
        c.expect(v.kind == Verdict::Kind::Unknown,
                 [&] { return "A6: expected Unknown, got " + v.to_string(); });
    }
    return c.result(6, "catalog verdicts (D6/D8/D12/Q8/A5/S5-S7/2p groups/A6)");
}

// 7. characteristic-subgroup checks over all compatible-pair specs, window 4.
CriterionResult criterion_characteristic() {
    Check c;
    auto run = [&](const FiniteGroup& G, const CharSubgroupTag& tag) {
        WreathGroup W(G);
        auto rep = verify_characteristic(W, tag, all_compatible_specs(W), 4);
        c.expect(rep.pass && rep.members_checked > 0,
                 [&] { return G.name() + " " + tag.to_string() + ": " + rep.violation; });
    };
    run(FiniteGroup::cyclic(4), CharSubgroupTag::lamp_base());
    run(FiniteGroup::cyclic(4), CharSubgroupTag::order_subgroup(2));
    run(FiniteGroup::cyclic(9), CharSubgroupTag::order_subgroup(3));
    for (const auto& spec : {"Q8", "D6"}) {
        FiniteGroup G = build_group(spec);
        run(G, CharSubgroupTag::center_wreath());
        run(G, CharSubgroupTag::commutator_lamps());
    }
    return c.result(7, "characteristic subgroups invariant under all compatible specs");
}

// 8. blockwise product equals direct orbit enumeration on window carriers
//    <= 10^4 for n in {2,3,5}.
CriterionResult criterion_blockwise() {
    Check c;
    for (int n : {2, 3, 5}) {
        WreathGroup W(FiniteGroup::cyclic(n));
        std::vector<GroupAut> units{identity_aut(W.base())};
        if (n > 2) units.push_back(unit_aut(W.base(), 2));
        for (const auto& xi : units)
            for (int offset : {0, 1}) {
                LampAutSpec s = make_autospec(W, xi, offset, -1);
                std::vector<std::vector<int>> windows = {
                    {}, {0}, {1}, {0, 1}, {1, 2}, {0, 1, 2}};
                if (n < 5) windows.push_back({0, 1, 2, 3});
                for (const auto& w : windows) {
                    long long product = window_class_count(W, s, w);
                    long long direct = window_direct_count(W, s, w);
                    c.expect(product == direct, [&] {
                        std::ostringstream os;
                        os << "n=" << n << " spec " << s.to_string() << " window {";
                        for (int i : w) os << i << ",";
                        os << "}: product " << product << " != direct " << direct;
                        return os.str();
                    });
                }
            }
    }
    return c.result(8, "blockwise decomposition vs direct enumeration (n in {2,3,5})");
}

}  // namespace

std::vector<std::vector<int>> abelian_factor_lists(int order) {
    // all multisets of prime powers whose product is `order`
    std::vector<std::vector<int>> out;
    if (order == 1) {
        out.push_back({1});
        return out;
    }
    // partitions per prime
    std::vector<std::pair<int, int>> primes;  // (p, exponent)
    int rest = order;
    for (int p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            int k = 0;
            while (rest % p == 0) {
                rest /= p;
                ++k;
            }
            primes.emplace_back(p, k);
        }
    if (rest > 1) primes.emplace_back(rest, 1);

    std::function<std::vector<std::vector<int>>(int)> partitions = [&](int k) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int left, int maxpart) {
            if (left == 0) {
                parts.push_back(cur);
                return;
            }
            for (int next = std::min(left, maxpart); next >= 1; --next) {
                cur.push_back(next);
                rec(left - next, next);
                cur.pop_back();
            }
        };
        rec(k, k);
        return parts;
    };

    std::vector<std::vector<std::vector<int>>> per_prime;  // factor lists per prime
    for (auto [p, k] : primes) {
        std::vector<std::vector<int>> lists;
        for (const auto& part : partitions(k)) {
            std::vector<int> factors;
            for (int e : part) {
                int q = 1;
                for (int i = 0; i < e; ++i) q *= p;
                factors.push_back(q);
            }
            lists.push_back(factors);
        }
        per_prime.push_back(lists);
    }
    std::vector<std::vector<int>> acc{{}};
    for (const auto& lists : per_prime) {
        std::vector<std::vector<int>> next;
        for (const auto& base : acc)
            for (const auto& add : lists) {
                auto combined = base;
                combined.insert(combined.end(), add.begin(), add.end());
                next.push_back(combined);
            }
        acc = std::move(next);
    }
    return acc;
}

std::vector<CriterionResult> acceptance_criteria() {
    return {
        criterion_metric_agreement(), criterion_cayley_dl(),     criterion_method_agreement(),
        criterion_cyclic_theorem(),   criterion_fixed_points(),  criterion_catalog_verdicts(),
        criterion_characteristic(),   criterion_blockwise(),
    };
}

bool run_acceptance_suite(std::ostream& out) {
    bool all = true;
    for (const auto& r : acceptance_criteria()) {
        out << (r.pass ? "PASS" : "FAIL") << "  [" << r.number << "] " << r.title << " ("
            << r.detail << ")\n";
        all = all && r.pass;
    }
    out << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES present") << "\n";
    return all;
}

}  // namespace wreathlab
