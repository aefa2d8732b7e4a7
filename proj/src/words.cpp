#include "wreathlab/words.hpp"

#include <sstream>

namespace wreathlab {

namespace {

WordToken parse_token(const std::string& tok, GenSet gens, int n) {
    std::string base = tok;
    int sign = +1;
    if (base.size() > 3 && base.ends_with("^-1")) {
        sign = -1;
        base = base.substr(0, base.size() - 3);
    } else if (auto caret = base.find('^'); caret != std::string::npos && base[0] != '(') {
        throw ValidationError("bad exponent in token '" + tok + "' (only ^-1 is allowed)");
    }
    if (base == "t") return {0, sign};
    if (base == "a") {
        if (gens != GenSet::AT)
            throw ValidationError("token 'a' is not in the ta-generating set");
        return {-1, sign};
    }
    if (base.size() >= 4 && base.front() == '(' && base.back() == ')') {
        std::string inner = base.substr(1, base.size() - 2);
        if (gens != GenSet::TA)
            throw ValidationError("token '" + tok + "' is not in the {a,t} generating set");
        if (inner == "ta") return {1, sign};
        if (inner.starts_with("ta^")) {
            std::string num = inner.substr(3);
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                throw ValidationError("bad exponent in token '" + tok + "'");
            int k = std::stoi(num);
            if (k < 1 || k >= n)
                throw ValidationError("exponent " + num + " out of range 1.." +
                                      std::to_string(n - 1) + " in token '" + tok + "'");
            return {k, sign};
        }
    }
    throw ValidationError("unknown token '" + tok + "'");
}

}  // namespace

Word parse_word(const std::string& text, GenSet gens, int lamp_order) {
    if (lamp_order < 1) throw ValidationError("lamp order must be >= 1");
    Word w;
    w.gens = gens;
    w.lamp_order = lamp_order;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) w.tokens.push_back(parse_token(tok, gens, lamp_order));
    return w;
}

std::string print_word(const Word& w) {
    std::string out;
    for (const auto& t : w.tokens) {
        if (!out.empty()) out += ' ';
        if (t.gen == -1)
            out += 'a';
        else if (t.gen == 0)
            out += 't';
        else if (t.gen == 1)
            out += "(ta)";
        else
            out += "(ta^" + std::to_string(t.gen) + ")";
        if (t.sign < 0) out += "^-1";
    }
    return out;
}

WreathElement eval_word(const WreathGroup& W, const Word& w) {
    if (W.lamp_order() != w.lamp_order)
        throw std::invalid_argument("word lamp order does not match the group");
    WreathElement acc = W.identity_element();
    for (const auto& t : w.tokens) {
        WreathElement g;
        if (t.gen == -1) {
            g = W.lamp(0, 1 % W.lamp_order());
        } else {
            g = W.t_power(1);
            if (t.gen != 0) g = W.mul(g, W.lamp(0, t.gen));
        }
        if (t.sign < 0) g = W.inverse(g);
        acc = W.mul(acc, g);
    }
    return acc;
}

}  // namespace wreathlab
