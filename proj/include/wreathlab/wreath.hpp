#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wreathlab/finite_group.hpp"

namespace wreathlab {

/// Finitely supported lamp configuration: sorted (position, element index)
/// entries, never mapping to the identity.
class LampConfig {
public:
    LampConfig() = default;
    explicit LampConfig(std::vector<std::pair<int, int>> entries);  // will be canonicalized

    const std::vector<std::pair<int, int>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    size_t support_size() const { return entries_.size(); }
    int value_at(int pos, int identity) const;

    bool operator==(const LampConfig&) const = default;

private:
    friend class WreathGroup;
    std::vector<std::pair<int, int>> entries_;
};

/// An element of G wr Z: lamps plus the cursor shift (exponent of t).
struct WreathElement {
    LampConfig lamps;
    int shift = 0;

    bool operator==(const WreathElement&) const = default;
    bool is_identity() const { return lamps.empty() && shift == 0; }
};

enum class GenSet { AT, TA };

/// The ambient group G wr Z: all element arithmetic happens through this
/// context, which owns the base group.
class WreathGroup {
public:
    static constexpr int kDefaultBallCap = 10;

    explicit WreathGroup(FiniteGroup base);

    const FiniteGroup& base() const { return G_; }
    int lamp_order() const { return G_.order(); }

    WreathElement identity_element() const { return {}; }
    /// Single lamp g at the given position, cursor at 0.
    WreathElement lamp(int position, int value) const;
    /// Pure cursor move t^k.
    WreathElement t_power(int k) const;

    WreathElement mul(const WreathElement& x, const WreathElement& y) const;
    WreathElement inverse(const WreathElement& x) const;
    LampConfig theta_shift(int m, const LampConfig& c) const;
    LampConfig lamp_mul(const LampConfig& a, const LampConfig& b) const;

    /// The generating set as elements, fixed order, inverses appended:
    ///  AT: a, t, a^-1, t^-1 for cyclic G; all single lamps then t for general G.
    ///  TA: t g for every g in G (g = e gives t itself), then inverses.
    std::vector<WreathElement> generators(GenSet gens) const;
    /// Right multiplication of g by the TA generating set (2|G| elements).
    std::vector<WreathElement> action_neighbors(const WreathElement& g) const;

    /// Exact Cayley-graph distance from the identity, or nullopt if > cap.
    std::optional<int> word_length_bfs(const WreathElement& g, GenSet gens,
                                       int cap = kDefaultBallCap) const;

    struct Ball {
        std::vector<WreathElement> elements;  // BFS discovery order
        std::vector<int> distance;            // parallel to elements
        std::vector<size_t> sphere_sizes;     // per radius 0..r
    };
    Ball ball(GenSet gens, int radius) const;

    std::string to_string(const WreathElement& g) const;

    /// Stable hash key (shift then entries).
    static std::vector<int> key(const WreathElement& g);

private:
    void check(const WreathElement& x) const;
    FiniteGroup G_;
};

struct WreathKeyHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(static_cast<uint32_t>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

using WreathIndex = std::unordered_map<std::vector<int>, int, WreathKeyHash>;

}  // namespace wreathlab
