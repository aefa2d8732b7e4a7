#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "wreathlab/normal_form.hpp"

using namespace wreathlab;

namespace {

WreathElement elem(const WreathGroup& W, std::vector<std::pair<int, int>> lamps, int shift) {
    WreathElement g;
    g.lamps = LampConfig(std::move(lamps));
    g.shift = shift;
    for (auto [p, v] : g.lamps.entries()) {
        (void)p;
        REQUIRE(v != W.base().identity());
    }
    return g;
}

}  // namespace

TEST_CASE("multiplication and the shift action") {
    WreathGroup W(FiniteGroup::cyclic(3));
    auto t = W.t_power(1);
    auto a = W.lamp(0, 1);
    // t * a puts the lamp one step right of the origin
    CHECK(W.mul(t, a) == elem(W, {{1, 1}}, 1));
    // lamp orders: a_j * a_j^{n-1} = id
    auto aj = W.lamp(5, 1);
    auto aj2 = W.lamp(5, 2);
    CHECK(W.mul(aj, aj2).is_identity());
    // t^-1 (ta) = a
    auto ta = elem(W, {{1, 1}}, 1);
    CHECK(W.mul(W.t_power(-1), ta) == a);
    // theta_shift
    CHECK(W.theta_shift(0, a.lamps) == a.lamps);
    CHECK(W.theta_shift(2, a.lamps) == elem(W, {{2, 1}}, 0).lamps);
    CHECK(W.theta_shift(-1, LampConfig({{1, 1}, {3, 2}})) == LampConfig({{0, 1}, {2, 2}}));
}

TEST_CASE("inverses") {
    WreathGroup W(FiniteGroup::cyclic(3));
    CHECK(W.inverse(W.t_power(3)) == W.t_power(-3));
    CHECK(W.inverse(W.lamp(0, 1)) == W.lamp(0, 2));
    auto g = elem(W, {{1, 1}}, 2);
    CHECK(W.inverse(g) == elem(W, {{-1, 2}}, -2));
    CHECK(W.mul(g, W.inverse(g)).is_identity());
    CHECK(W.mul(W.inverse(g), g).is_identity());
}

TEST_CASE("group axioms on random triples") {
    for (int n : {2, 3, 5}) {
        WreathGroup W(FiniteGroup::cyclic(n));
        std::mt19937 rng(12345 + n);
        auto random_elem = [&] {
            WreathElement g;
            g.shift = static_cast<int>(rng() % 7) - 3;
            std::vector<std::pair<int, int>> lamps;
            std::set<int> used;
            int count = static_cast<int>(rng() % 4);
            for (int i = 0; i < count; ++i) {
                int pos = static_cast<int>(rng() % 9) - 4;
                int val = 1 + static_cast<int>(rng() % (n - 1));
                if (used.insert(pos).second) lamps.emplace_back(pos, val);
            }
            g.lamps = LampConfig(lamps);
            return g;
        };
        for (int trial = 0; trial < 1000; ++trial) {
            auto x = random_elem(), y = random_elem(), z = random_elem();
            CHECK(W.mul(W.mul(x, y), z) == W.mul(x, W.mul(y, z)));
            CHECK(W.mul(x, W.inverse(x)).is_identity());
        }
    }
}

TEST_CASE("mismatched base group is rejected") {
    WreathGroup W2(FiniteGroup::cyclic(2));
    WreathGroup W5(FiniteGroup::cyclic(5));
    auto g = W5.lamp(0, 4);  // value 4 does not exist in C2's index range
    CHECK_THROWS_AS(W2.mul(g, g), std::invalid_argument);
}

TEST_CASE("word parsing") {
    auto w = parse_word("t^-1 (ta)", GenSet::TA, 3);
    CHECK(w.tokens == std::vector<WordToken>{{0, -1}, {1, +1}});
    CHECK(parse_word("", GenSet::TA, 3).tokens.empty());
    auto w2 = parse_word("(ta^2)^-1 t", GenSet::TA, 3);
    CHECK(w2.tokens == std::vector<WordToken>{{2, -1}, {0, +1}});
    CHECK(parse_word("a a^-1 t", GenSet::AT, 4).tokens ==
          std::vector<WordToken>{{-1, +1}, {-1, -1}, {0, +1}});

    CHECK_THROWS_AS(parse_word("b", GenSet::AT, 3), ValidationError);
    CHECK_THROWS_AS(parse_word("a^2", GenSet::AT, 3), ValidationError);
    CHECK_THROWS_AS(parse_word("(ta^0)", GenSet::TA, 3), ValidationError);
    CHECK_THROWS_AS(parse_word("(ta^3)", GenSet::TA, 3), ValidationError);  // K < n
    CHECK_THROWS_AS(parse_word("a", GenSet::TA, 3), ValidationError);       // outside TA
    CHECK_THROWS_AS(parse_word("(ta)", GenSet::AT, 3), ValidationError);    // outside AT
    CHECK_THROWS_AS(parse_word("(ta^x)", GenSet::TA, 3), ValidationError);
}

TEST_CASE("parse/print round trip on all printable words of length <= 5") {
    // AT alphabet: a, a^-1, t, t^-1; TA alphabet (n=3): t, (ta), (ta^2) and inverses
    auto enumerate = [](GenSet gens, int n, int maxlen) {
        std::vector<WordToken> alphabet;
        std::vector<int> bases;
        if (gens == GenSet::AT)
            bases = {-1, 0};
        else
            for (int k = 0; k < n; ++k) bases.push_back(k);
        for (int b : bases)
            for (int s : {+1, -1}) alphabet.push_back({b, s});
        std::vector<Word> words;
        std::vector<WordToken> cur;
        std::function<void(int)> rec = [&](int remaining) {
            Word w;
            w.gens = gens;
            w.lamp_order = n;
            w.tokens = cur;
            words.push_back(w);
            if (remaining == 0) return;
            for (const auto& tok : alphabet) {
                cur.push_back(tok);
                rec(remaining - 1);
                cur.pop_back();
            }
        };
        rec(maxlen);
        return words;
    };
    for (auto gens : {GenSet::AT, GenSet::TA}) {
        auto words = enumerate(gens, 3, 5);
        for (const auto& w : words) CHECK(parse_word(print_word(w), gens, 3) == w);
    }
}

TEST_CASE("word evaluation") {
    WreathGroup W(FiniteGroup::cyclic(3));
    CHECK(eval_word(W, parse_word("t t^-1", GenSet::AT, 3)).is_identity());
    CHECK(eval_word(W, parse_word("t^-1 (ta)", GenSet::TA, 3)) == W.lamp(0, 1));
    CHECK(eval_word(W, parse_word("t^-1 (ta^2)", GenSet::TA, 3)) == W.lamp(0, 2));
    // concatenation = multiplication
    auto u = parse_word("a t a", GenSet::AT, 3);
    auto v = parse_word("t^-1 a^-1 t", GenSet::AT, 3);
    Word uv;
    uv.gens = GenSet::AT;
    uv.lamp_order = 3;
    uv.tokens = u.tokens;
    uv.tokens.insert(uv.tokens.end(), v.tokens.begin(), v.tokens.end());
    CHECK(eval_word(W, uv) == W.mul(eval_word(W, u), eval_word(W, v)));
}

TEST_CASE("normal forms") {
    WreathGroup W3(FiniteGroup::cyclic(3));
    auto nf_id = normal_form(W3, W3.identity_element());
    CHECK(nf_id.nonneg.empty());
    CHECK(nf_id.neg.empty());
    CHECK(nf_id.shift == 0);

    auto nf_a = normal_form(W3, W3.lamp(0, 1));
    CHECK(nf_a.nonneg == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(nf_a.neg.empty());
    CHECK(nf_a.shift == 0);

    // a^2 at 2 reduces to exponent -1 (h = 1); neg side holds -1
    auto g = elem(W3, {{2, 2}, {-1, 1}}, 1);
    auto nf = normal_form(W3, g);
    CHECK(nf.nonneg == std::vector<std::pair<int, int>>{{2, -1}});
    CHECK(nf.neg == std::vector<std::pair<int, int>>{{-1, 1}});
    CHECK(nf.shift == 1);
    CHECK(eval_word(W3, to_word(nf)) == g);

    // even order: +h kept, -h never appears
    WreathGroup W4(FiniteGroup::cyclic(4));
    auto nf4 = normal_form(W4, elem(W4, {{0, 2}, {1, 3}}, 0));
    CHECK(nf4.nonneg == std::vector<std::pair<int, int>>{{0, 2}, {1, -1}});

    CHECK_THROWS_AS(normal_form(WreathGroup(FiniteGroup::quaternion8()),
                                WreathElement{}, NormalFormSide::RF),
                    std::domain_error);
}

TEST_CASE("normal form soundness and uniqueness on BFS balls") {
    for (auto [n, radius] : {std::pair{2, 7}, std::pair{3, 7}}) {
        WreathGroup W(FiniteGroup::cyclic(n));
        auto ball = W.ball(GenSet::AT, radius);
        std::map<std::string, WreathElement> seen;
        for (const auto& g : ball.elements) {
            for (auto side : {NormalFormSide::RF, NormalFormSide::LF}) {
                auto nf = normal_form(W, g, side);
                CHECK(eval_word(W, to_word(nf)) == g);  // soundness
            }
            auto key = to_string(normal_form(W, g));
            auto [it, fresh] = seen.emplace(key, g);
            CHECK(fresh);  // distinct elements get distinct normal forms
            if (!fresh) CHECK(it->second == g);
        }
    }
}

TEST_CASE("word length formula matches BFS") {
    WreathGroup W2(FiniteGroup::cyclic(2));
    CHECK(word_length_ct(W2, W2.identity_element()) == 0);
    CHECK(word_length_ct(W2, elem(W2, {{0, 1}}, 1)) == 2);
    CHECK(word_length_ct(W2, elem(W2, {{1, 1}, {-1, 1}}, 0)) == 6);
    CHECK(W2.word_length_bfs(elem(W2, {{1, 1}, {-1, 1}}, 0), GenSet::AT) == 6);

    // full agreement on balls: L2 radius 7, L3 radius 6
    for (auto [n, radius] : {std::pair{2, 7}, std::pair{3, 6}}) {
        WreathGroup W(FiniteGroup::cyclic(n));
        auto ball = W.ball(GenSet::AT, radius);
        for (size_t i = 0; i < ball.elements.size(); ++i)
            REQUIRE(word_length_ct(W, ball.elements[i]) == ball.distance[i]);
    }
}

TEST_CASE("BFS metric") {
    WreathGroup W2(FiniteGroup::cyclic(2));
    CHECK(W2.word_length_bfs(W2.identity_element(), GenSet::AT) == 0);
    CHECK(W2.word_length_bfs(W2.lamp(0, 1), GenSet::AT) == 1);
    CHECK(W2.word_length_bfs(W2.lamp(0, 1), GenSet::TA) == 2);  // a = t^-1 (ta)
    // out-of-range is a signal, not an exception
    auto far = W2.t_power(9);
    CHECK(W2.word_length_bfs(far, GenSet::AT, 3) == std::nullopt);
    CHECK(W2.word_length_bfs(far, GenSet::AT, 9) == 9);
}
