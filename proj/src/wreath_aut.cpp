#include "wreathlab/wreath_aut.hpp"

#include <algorithm>
#include <sstream>

namespace wreathlab {

std::string LampAutSpec::to_string() const {
    std::ostringstream os;
    os << "xi=[";
    for (size_t i = 0; i < xi.image.size(); ++i) os << (i ? "," : "") << xi.image[i];
    os << "] c=" << offset << " eps=" << (eps > 0 ? "+1" : "-1");
    return os.str();
}

LampAutSpec make_autospec(const WreathGroup& W, GroupAut xi, int offset, int eps) {
    if (eps != 1 && eps != -1) throw ValidationError("eps must be +1 or -1");
    if (!is_automorphism(W.base(), xi))
        throw ValidationError("xi is not an automorphism of the base group");
    LampAutSpec s{std::move(xi), offset, eps};
    // Deterministic spot-check of the compatibility identity
    //   phi'(Theta(b)(a)) = Theta(phibar(b))(phi'(a)).
    const FiniteGroup& G = W.base();
    if (G.order() > 1) {
        std::vector<int> vals;
        for (int v = 0; v < G.order() && vals.size() < 3; ++v)
            if (v != G.identity()) vals.push_back(v);
        const int positions[3] = {-1, 0, 2};
        std::vector<std::pair<int, int>> entries;
        for (size_t i = 0; i < vals.size(); ++i) entries.emplace_back(positions[i], vals[i]);
        LampConfig a(entries);
        for (int b : {-2, -1, 1, 3}) {
            LampConfig lhs = apply_aut_lamps(W, s, W.theta_shift(b, a));
            LampConfig rhs = W.theta_shift(s.eps * b, apply_aut_lamps(W, s, a));
            if (!(lhs == rhs)) throw ValidationError("compatibility identity failed (internal)");
        }
    }
    return s;
}

LampAutSpec parse_autospec(const WreathGroup& W, const std::string& text, int aut_cap) {
    std::istringstream in(text);
    std::string tok;
    GroupAut xi;
    bool have_xi = false;
    int offset = 0, eps = 0;
    while (in >> tok) {
        if (tok.starts_with("xi=")) {
            std::string v = tok.substr(3);
            if (v.starts_with("*")) {
                xi = unit_aut(W.base(), std::stoi(v.substr(1)));
            } else {
                auto auts = automorphism_group(W.base(), aut_cap);
                int idx = std::stoi(v);
                if (idx < 0 || idx >= static_cast<int>(auts.size()))
                    throw ValidationError("aut index " + v + " out of range 0.." +
                                          std::to_string(auts.size() - 1));
                xi = auts[idx];
            }
            have_xi = true;
        } else if (tok.starts_with("c=")) {
            offset = std::stoi(tok.substr(2));
        } else if (tok.starts_with("eps=")) {
            std::string v = tok.substr(4);
            if (v == "+1" || v == "1")
                eps = 1;
            else if (v == "-1")
                eps = -1;
            else
                throw ValidationError("eps must be +1 or -1");
        } else {
            throw ValidationError("bad autospec token '" + tok + "'");
        }
    }
    if (!have_xi) xi = identity_aut(W.base());
    if (eps == 0) throw ValidationError("autospec needs eps=<+1|-1>");
    return make_autospec(W, std::move(xi), offset, eps);
}

LampConfig apply_aut_lamps(const WreathGroup& W, const LampAutSpec& s, const LampConfig& c) {
    std::vector<std::pair<int, int>> entries;
    entries.reserve(c.entries().size());
    for (auto [p, v] : c.entries()) entries.emplace_back(s.offset + s.eps * p, s.xi.image[v]);
    std::sort(entries.begin(), entries.end());
    (void)W;
    return LampConfig(entries);
}

WreathElement apply_aut(const WreathGroup& W, const LampAutSpec& s, const WreathElement& g) {
    WreathElement out;
    out.lamps = apply_aut_lamps(W, s, g.lamps);
    out.shift = s.eps * g.shift;
    return out;
}

// --- blocks ---

long long BlockMap::carrier_size(const FiniteGroup& G) const {
    long long n = G.order();
    return kind == BlockKind::Pair ? n * n : n;
}

long long BlockMap::map(const FiniteGroup& G, long long p) const {
    long long n = G.order();
    if (kind == BlockKind::Middle) return xi.image[static_cast<int>(p)];
    int x = static_cast<int>(p / n), y = static_cast<int>(p % n);
    return static_cast<long long>(xi.image[y]) * n + xi.image[x];
}

int block_id(const LampAutSpec& s, int i) { return std::min(i, s.offset - i); }

BlockMap block_map(const WreathGroup& W, const LampAutSpec& s, int i) {
    (void)W;
    if (s.eps != -1)
        throw std::domain_error("blocks exist only for eps=-1 (mirrored) specs");
    BlockMap b;
    b.index = i;
    b.partner = s.offset - i;
    b.kind = (b.partner == i) ? BlockKind::Middle : BlockKind::Pair;
    b.xi = s.xi;
    return b;
}

std::vector<long long> block_fixed_points(const WreathGroup& W, const LampAutSpec& s, int i) {
    BlockMap b = block_map(W, s, i);
    std::vector<long long> fixed;
    long long size = b.carrier_size(W.base());
    for (long long p = 0; p < size; ++p)
        if (b.map(W.base(), p) == p) fixed.push_back(p);
    return fixed;
}

// --- characteristic subgroups ---

std::string CharSubgroupTag::to_string() const {
    switch (kind) {
        case CharSubgroupKind::LampBase: return "lamp-base";
        case CharSubgroupKind::CommutatorLamps: return "commutator-lamps";
        case CharSubgroupKind::CenterWreath: return "center-wreath";
        case CharSubgroupKind::OrderSubgroup: return "h" + std::to_string(param);
        case CharSubgroupKind::SylowWreath: return "sylow-wreath-" + std::to_string(param);
    }
    return "?";
}

namespace {

std::vector<bool> member_value_mask(const WreathGroup& W, const CharSubgroupTag& tag) {
    const FiniteGroup& G = W.base();
    std::vector<bool> ok(G.order(), false);
    switch (tag.kind) {
        case CharSubgroupKind::LampBase:
            ok.assign(G.order(), true);
            break;
        case CharSubgroupKind::CommutatorLamps:
            for (int x : commutator_subgroup(G)) ok[x] = true;
            break;
        case CharSubgroupKind::CenterWreath:
            for (int x : center(G)) ok[x] = true;
            break;
        case CharSubgroupKind::OrderSubgroup: {
            if (G.family() != Family::Cyclic)
                throw ValidationError("order-subgroup tags require a cyclic base group");
            int d = tag.param;
            if (d != 2 && d != 3) throw ValidationError("order-subgroup parameter must be 2 or 3");
            if (G.order() % d != 0)
                throw ValidationError("order-subgroup parameter " + std::to_string(d) +
                                      " does not divide " + std::to_string(G.order()));
            int step = G.order() / d;
            for (int x = 0; x < G.order(); x += step) ok[x] = true;
            break;
        }
        case CharSubgroupKind::SylowWreath: {
            auto [subg, unique] = sylow(G, tag.param);
            if (!unique)
                throw ValidationError("sylow-wreath tag requires a unique Sylow " +
                                      std::to_string(tag.param) + "-subgroup");
            for (int x : subg) ok[x] = true;
            break;
        }
    }
    return ok;
}

}  // namespace

bool is_member(const WreathGroup& W, const WreathElement& g, const CharSubgroupTag& tag) {
    bool shift_must_vanish = tag.kind == CharSubgroupKind::LampBase ||
                             tag.kind == CharSubgroupKind::CommutatorLamps;
    if (shift_must_vanish && g.shift != 0) return false;
    auto ok = member_value_mask(W, tag);
    for (auto [p, v] : g.lamps.entries()) {
        (void)p;
        if (!ok[v]) return false;
    }
    return true;
}

std::string CharCheckReport::to_string() const {
    std::ostringstream os;
    os << "characteristic check: " << tag.to_string() << " window " << window << ": "
       << members_checked << " members x " << specs_checked << " specs -> "
       << (pass ? "PASS" : "FAIL " + violation);
    return os.str();
}

CharCheckReport verify_characteristic(const WreathGroup& W, const CharSubgroupTag& tag,
                                      const std::vector<LampAutSpec>& specs, int window) {
    CharCheckReport rep;
    rep.tag = tag;
    rep.window = window;
    rep.specs_checked = specs.size();
    auto ok = member_value_mask(W, tag);
    bool shift_must_vanish = tag.kind == CharSubgroupKind::LampBase ||
                             tag.kind == CharSubgroupKind::CommutatorLamps;
    auto ball = W.ball(GenSet::TA, window);
    rep.pass = true;
    for (const auto& g : ball.elements) {
        if (shift_must_vanish && g.shift != 0) continue;
        bool member = true;
        for (auto [p, v] : g.lamps.entries()) {
            (void)p;
            if (!ok[v]) {
                member = false;
                break;
            }
        }
        if (!member) continue;
        ++rep.members_checked;
        for (const auto& s : specs) {
            WreathElement img = apply_aut(W, s, g);
            if (!is_member(W, img, tag)) {
                rep.pass = false;
                if (rep.violation.empty())
                    rep.violation = "spec " + s.to_string() + " maps " + W.to_string(g) +
                                    " outside the subgroup";
            }
        }
    }
    return rep;
}

std::vector<LampAutSpec> all_compatible_specs(const WreathGroup& W, int aut_cap) {
    std::vector<LampAutSpec> specs;
    for (const auto& xi : automorphism_group(W.base(), aut_cap))
        for (int c : {0, 1})
            for (int eps : {+1, -1}) specs.push_back(make_autospec(W, xi, c, eps));
    return specs;
}

}  // namespace wreathlab
