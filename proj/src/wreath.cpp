#include "wreathlab/wreath.hpp"

#include <algorithm>
#include <sstream>

namespace wreathlab {

LampConfig::LampConfig(std::vector<std::pair<int, int>> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1].first == entries_[i].first)
            throw ValidationError("duplicate lamp position " + std::to_string(entries_[i].first));
}

int LampConfig::value_at(int pos, int identity) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(pos, -1));
    if (it != entries_.end() && it->first == pos) return it->second;
    return identity;
}

WreathGroup::WreathGroup(FiniteGroup base) : G_(std::move(base)) {}

void WreathGroup::check(const WreathElement& x) const {
    for (auto [p, v] : x.lamps.entries()) {
        (void)p;
        if (v < 0 || v >= G_.order())
            throw std::invalid_argument("lamp value " + std::to_string(v) +
                                        " out of range for base group of order " +
                                        std::to_string(G_.order()));
        if (v == G_.identity())
            throw std::invalid_argument("lamp configuration stores an identity value");
    }
}

WreathElement WreathGroup::lamp(int position, int value) const {
    if (value < 0 || value >= G_.order()) throw std::invalid_argument("lamp value out of range");
    if (value == G_.identity()) return {};
    WreathElement e;
    e.lamps.entries_ = {{position, value}};
    return e;
}

WreathElement WreathGroup::t_power(int k) const {
    WreathElement e;
    e.shift = k;
    return e;
}

LampConfig WreathGroup::theta_shift(int m, const LampConfig& c) const {
    LampConfig out;
    out.entries_.reserve(c.entries_.size());
    for (auto [p, v] : c.entries_) out.entries_.emplace_back(p + m, v);
    return out;
}

LampConfig WreathGroup::lamp_mul(const LampConfig& a, const LampConfig& b) const {
    LampConfig out;
    out.entries_.reserve(a.entries_.size() + b.entries_.size());
    size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
        if (j == b.entries_.size() ||
            (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
            out.entries_.push_back(a.entries_[i++]);
        } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
            out.entries_.push_back(b.entries_[j++]);
        } else {
            int v = G_.op(a.entries_[i].second, b.entries_[j].second);
            if (v != G_.identity()) out.entries_.emplace_back(a.entries_[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

WreathElement WreathGroup::mul(const WreathElement& x, const WreathElement& y) const {
    check(x);
    check(y);
    WreathElement out;
    out.lamps = lamp_mul(x.lamps, theta_shift(x.shift, y.lamps));
    out.shift = x.shift + y.shift;
    return out;
}

WreathElement WreathGroup::inverse(const WreathElement& x) const {
    check(x);
    WreathElement out;
    out.shift = -x.shift;
    out.lamps.entries_.reserve(x.lamps.entries_.size());
    for (auto [p, v] : x.lamps.entries_) out.lamps.entries_.emplace_back(p - x.shift, G_.inv(v));
    std::sort(out.lamps.entries_.begin(), out.lamps.entries_.end());
    return out;
}

std::vector<WreathElement> WreathGroup::generators(GenSet gens) const {
    std::vector<WreathElement> out;
    if (gens == GenSet::AT) {
        if (G_.family() == Family::Cyclic && G_.order() >= 2) {
            out.push_back(lamp(0, 1));
        } else {
            for (int g = 0; g < G_.order(); ++g)
                if (g != G_.identity()) out.push_back(lamp(0, g));
        }
        out.push_back(t_power(1));
    } else {
        for (int g = 0; g < G_.order(); ++g) {
            WreathElement e = t_power(1);
            if (g != G_.identity()) e.lamps.entries_ = {{1, g}};
            out.push_back(e);
        }
    }
    size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(inverse(out[i]));
    return out;
}

std::vector<WreathElement> WreathGroup::action_neighbors(const WreathElement& g) const {
    std::vector<WreathElement> out;
    for (const auto& s : generators(GenSet::TA)) out.push_back(mul(g, s));
    return out;
}

std::vector<int> WreathGroup::key(const WreathElement& g) {
    std::vector<int> k;
    k.reserve(1 + 2 * g.lamps.entries().size());
    k.push_back(g.shift);
    for (auto [p, v] : g.lamps.entries()) {
        k.push_back(p);
        k.push_back(v);
    }
    return k;
}

std::optional<int> WreathGroup::word_length_bfs(const WreathElement& g, GenSet gens,
                                                int cap) const {
    if (cap < 0) throw std::invalid_argument("cap must be >= 0");
    check(g);
    if (g.is_identity()) return 0;
    auto gen_elems = generators(gens);
    WreathIndex seen;
    std::vector<WreathElement> frontier{identity_element()};
    seen.emplace(key(identity_element()), 0);
    auto target = key(g);
    for (int dist = 1; dist <= cap; ++dist) {
        std::vector<WreathElement> next;
        for (const auto& x : frontier)
            for (const auto& s : gen_elems) {
                WreathElement y = mul(x, s);
                auto k = key(y);
                if (seen.emplace(k, dist).second) {
                    if (k == target) return dist;
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

WreathGroup::Ball WreathGroup::ball(GenSet gens, int radius) const {
    Ball b;
    auto gen_elems = generators(gens);
    WreathIndex seen;
    b.elements.push_back(identity_element());
    b.distance.push_back(0);
    b.sphere_sizes.push_back(1);
    seen.emplace(key(identity_element()), 0);
    size_t layer_begin = 0, layer_end = 1;
    for (int dist = 1; dist <= radius; ++dist) {
        for (size_t i = layer_begin; i < layer_end; ++i)
            for (const auto& s : gen_elems) {
                WreathElement y = mul(b.elements[i], s);
                if (seen.emplace(key(y), dist).second) {
                    b.elements.push_back(std::move(y));
                    b.distance.push_back(dist);
                }
            }
        layer_begin = layer_end;
        layer_end = b.elements.size();
        b.sphere_sizes.push_back(layer_end - layer_begin);
        if (layer_begin == layer_end) break;
    }
    return b;
}

std::string WreathGroup::to_string(const WreathElement& g) const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto [p, v] : g.lamps.entries()) {
        if (!first) os << ", ";
        first = false;
        os << p << ":" << G_.label(v);
    }
    os << "} t^" << g.shift;
    return os.str();
}

}  // namespace wreathlab
