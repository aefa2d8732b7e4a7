#include "wreathlab/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wreathlab {

namespace {

constexpr int kFact[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};

/// Lexicographic rank of a permutation of {0..n-1} via its Lehmer code.
template <class Perm>
int lehmer_rank(const Perm& p, int n) {
    int rank = 0;
    unsigned avail = (1u << n) - 1;
    for (int i = 0; i < n; ++i) {
        int d = p[i];
        rank += __builtin_popcount(avail & ((1u << d) - 1)) * kFact[n - 1 - i];
        avail &= ~(1u << d);
    }
    return rank;
}

std::string perm_label(const std::vector<int>& p) {
    std::string s;
    for (int v : p) s += static_cast<char>('0' + v);
    return s;
}

bool perm_is_even(const std::vector<int>& p) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Cyclic: return "cyclic";
        case Family::Dihedral: return "dihedral";
        case Family::Quaternion8: return "quaternion-8";
        case Family::Symmetric: return "symmetric";
        case Family::Alternating: return "alternating";
        case Family::DirectSum: return "direct-sum";
        case Family::Custom: return "custom";
    }
    return "?";
}

int FiniteGroup::op(int a, int b) const {
    if (!table_.empty()) return table_[static_cast<size_t>(a) * order_ + b];
    if (!perms_.empty()) {
        const auto& p = perms_[a];
        const auto& q = perms_[b];
        int n = static_cast<int>(p.size());
        int composed[8];
        for (int x = 0; x < n; ++x) composed[x] = p[q[x]];
        return perm_rank_[lehmer_rank(composed, n)];
    }
    // cyclic beyond the table cap
    return static_cast<int>((static_cast<long long>(a) + b) % order_);
}

int FiniteGroup::power(int a, long long e) const {
    if (e < 0) return power(inv(a), -e);
    int acc = identity_, base = a;
    while (e > 0) {
        if (e & 1) acc = op(acc, base);
        base = op(base, base);
        e >>= 1;
    }
    return acc;
}

int FiniteGroup::element_order(int a) const {
    int x = a, n = 1;
    while (x != identity_) {
        x = op(x, a);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    if (family_ == Family::Cyclic) return true;
    auto gens = generating_set(*this);
    for (int s : gens)
        for (int t : gens)
            if (op(s, t) != op(t, s)) return false;
    return true;
}

const std::vector<std::vector<int>>* FiniteGroup::permutations() const {
    return perms_.empty() ? nullptr : &perms_;
}

void FiniteGroup::finish(Family fam, int param, std::string name) {
    family_ = fam;
    family_param_ = param;
    name_ = std::move(name);
    inverse_.assign(order_, -1);
    if (!perms_.empty()) {
        for (int a = 0; a < order_; ++a) {
            const auto& p = perms_[a];
            int n = static_cast<int>(p.size());
            int invp[8];
            for (int x = 0; x < n; ++x) invp[p[x]] = x;
            inverse_[a] = perm_rank_[lehmer_rank(invp, n)];
        }
        return;
    }
    for (int a = 0; a < order_; ++a) {
        if (inverse_[a] >= 0) continue;
        if (table_.empty()) {  // cyclic formula backing
            inverse_[a] = (order_ - a) % order_;
            continue;
        }
        for (int b = 0; b < order_; ++b) {
            if (op(a, b) == identity_ && op(b, a) == identity_) {
                inverse_[a] = b;
                inverse_[b] = a;
                break;
            }
        }
        if (inverse_[a] < 0) throw ValidationError("element " + std::to_string(a) + " has no inverse");
    }
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw ValidationError("cyclic order must be >= 1");
    if (n > 1'000'000) throw CapacityError("cyclic order cap 1000000 exceeded");
    FiniteGroup G;
    G.order_ = n;
    G.identity_ = 0;
    G.labels_.resize(n);
    for (int k = 0; k < n; ++k)
        G.labels_[k] = k == 0 ? "e" : (k == 1 ? "a" : "a^" + std::to_string(k));
    if (n <= kTableCap) {
        G.table_.resize(static_cast<size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) G.table_[static_cast<size_t>(a) * n + b] = (a + b) % n;
    } else {
        G.table_.clear();
    }
    G.finish(Family::Cyclic, n, "C" + std::to_string(n));
    return G;
}

FiniteGroup FiniteGroup::dihedral(int order2n) {
    if (order2n < 4 || order2n % 2 != 0)
        throw ValidationError("dihedral order must be even and >= 4");
    if (order2n > kTableCap)
        throw CapacityError("dihedral order cap " + std::to_string(kTableCap) + " exceeded");
    int n = order2n / 2;
    FiniteGroup G;
    G.order_ = order2n;
    G.identity_ = 0;
    G.labels_.resize(order2n);
    for (int i = 0; i < n; ++i) {
        G.labels_[i] = i == 0 ? "e" : (i == 1 ? "r" : "r^" + std::to_string(i));
        G.labels_[n + i] = i == 0 ? "s" : (i == 1 ? "r s" : "r^" + std::to_string(i) + " s");
    }
    G.table_.resize(static_cast<size_t>(order2n) * order2n);
    auto set = [&](int a, int b, int c) { G.table_[static_cast<size_t>(a) * order2n + b] = c; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            set(i, j, (i + j) % n);                      // r^i r^j
            set(i, n + j, n + (i + j) % n);              // r^i (r^j s)
            set(n + i, j, n + ((i - j) % n + n) % n);    // (r^i s) r^j
            set(n + i, n + j, ((i - j) % n + n) % n);    // (r^i s)(r^j s)
        }
    G.finish(Family::Dihedral, order2n, "D" + std::to_string(order2n));
    return G;
}

FiniteGroup FiniteGroup::quaternion8() {
    // index = 2*axis + sign, axes (1, i, j, k), sign 0 = +, 1 = -
    FiniteGroup G;
    G.order_ = 8;
    G.identity_ = 0;
    G.labels_ = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{+1, +1, +1, +1},
                                       {+1, -1, +1, -1},
                                       {+1, -1, -1, +1},
                                       {+1, +1, -1, -1}};
    G.table_.resize(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ax = a / 2, bx = b / 2;
            int s = ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1) * sign_mul[ax][bx];
            G.table_[a * 8 + b] = 2 * axis_mul[ax][bx] + (s < 0 ? 1 : 0);
        }
    G.finish(Family::Quaternion8, 8, "Q8");
    return G;
}

FiniteGroup make_perm_group(Family fam, int n) {
    if (n < 1 || n > 8)
        throw CapacityError("symmetric/alternating degree cap 8 exceeded (got " +
                            std::to_string(n) + ")");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    FiniteGroup G;
    G.table_.clear();
    do {
        if (fam == Family::Alternating && !perm_is_even(p)) continue;
        G.perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    G.order_ = static_cast<int>(G.perms_.size());
    G.identity_ = 0;
    G.labels_.clear();
    G.labels_.reserve(G.order_);
    G.perm_rank_.assign(kFact[n], -1);
    for (int i = 0; i < G.order_; ++i) {
        G.perm_rank_[lehmer_rank(G.perms_[i], n)] = i;
        G.labels_.push_back(perm_label(G.perms_[i]));
    }
    if (G.order_ <= FiniteGroup::kTableCap) {
        // materialize for speed; keep perms_ for label/structure queries
        std::vector<int32_t> table(static_cast<size_t>(G.order_) * G.order_);
        for (int a = 0; a < G.order_; ++a)
            for (int b = 0; b < G.order_; ++b)
                table[static_cast<size_t>(a) * G.order_ + b] = G.op(a, b);
        G.table_ = std::move(table);
    }
    std::string prefix = fam == Family::Symmetric ? "S" : "A";
    G.finish(fam, n, prefix + std::to_string(n));
    return G;
}

FiniteGroup FiniteGroup::symmetric(int n) { return make_perm_group(Family::Symmetric, n); }
FiniteGroup FiniteGroup::alternating(int n) { return make_perm_group(Family::Alternating, n); }

FiniteGroup FiniteGroup::direct_sum(const std::vector<FiniteGroup>& parts) {
    if (parts.empty()) return cyclic(1);
    if (parts.size() == 1) return parts[0];
    long long total = 1;
    for (const auto& P : parts) {
        total *= P.order();
        if (total > kTableCap)
            throw CapacityError("direct-sum order cap " + std::to_string(kTableCap) + " exceeded");
    }
    int n = static_cast<int>(total);
    int k = static_cast<int>(parts.size());
    std::vector<int> radix(k);
    for (int i = 0; i < k; ++i) radix[i] = parts[i].order();
    auto decode = [&](int x, std::vector<int>& out) {
        for (int i = k - 1; i >= 0; --i) {
            out[i] = x % radix[i];
            x /= radix[i];
        }
    };
    FiniteGroup G;
    G.order_ = n;
    G.identity_ = 0;
    G.table_.resize(static_cast<size_t>(n) * n);
    G.labels_.resize(n);
    std::vector<int> xa(k), xb(k);
    for (int a = 0; a < n; ++a) {
        decode(a, xa);
        std::string lab = "(";
        for (int i = 0; i < k; ++i) lab += (i ? "," : "") + parts[i].label(xa[i]);
        G.labels_[a] = lab + ")";
        for (int b = 0; b < n; ++b) {
            decode(b, xb);
            int prod = 0;
            for (int i = 0; i < k; ++i) prod = prod * radix[i] + parts[i].op(xa[i], xb[i]);
            G.table_[static_cast<size_t>(a) * n + b] = prod;
        }
    }
    std::string name;
    for (int i = 0; i < k; ++i) name += (i ? "x" : "") + parts[i].name();
    G.finish(Family::DirectSum, n, name);
    return G;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> labels) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw ValidationError("empty table");
    if (n > kTableCap)
        throw CapacityError("custom table order cap " + std::to_string(kTableCap) + " exceeded");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != n) throw ValidationError("table is not square");
    // Latin square
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            int r = table[i][j], c = table[j][i];
            if (r < 0 || r >= n || c < 0 || c >= n) throw ValidationError("table entry out of range");
            if (seen_row[r] || seen_col[c]) throw ValidationError("table is not a Latin square");
            seen_row[r] = seen_col[c] = true;
        }
    }
    // identity
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
        if (ok) id = e;
    }
    if (id < 0) throw ValidationError("table has no identity element");

    FiniteGroup G;
    G.order_ = n;
    G.identity_ = id;
    G.table_.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G.table_[static_cast<size_t>(i) * n + j] = table[i][j];
    if (labels.empty()) {
        G.labels_.resize(n);
        for (int i = 0; i < n; ++i) G.labels_[i] = "g" + std::to_string(i);
        G.labels_[id] = "e";
    } else {
        if (static_cast<int>(labels.size()) != n) throw ValidationError("label count mismatch");
        G.labels_ = std::move(labels);
    }
    G.finish(Family::Custom, n, "table" + std::to_string(n));

    if (n <= kValidateCap) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
                        throw ValidationError("table is not associative");
    } else {
        // Light's test: associativity over a generating set implies associativity.
        auto gens = generating_set(G);
        for (int a = 0; a < n; ++a)
            for (int g : gens)
                for (int c = 0; c < n; ++c)
                    if (G.op(G.op(a, g), c) != G.op(a, G.op(g, c)))
                        throw ValidationError("table is not associative");
    }
    return G;
}

// --- automorphism helpers ---

GroupAut identity_aut(const FiniteGroup& G) {
    GroupAut f;
    f.image.resize(G.order());
    std::iota(f.image.begin(), f.image.end(), 0);
    return f;
}

GroupAut unit_aut(const FiniteGroup& G, int k) {
    if (G.family() != Family::Cyclic) throw ValidationError("unit_aut requires a cyclic group");
    int n = G.order();
    k = ((k % n) + n) % n;
    if (std::gcd(k == 0 ? n : k, n) != 1) throw ValidationError("not a unit mod " + std::to_string(n));
    GroupAut f;
    f.image.resize(n);
    for (int x = 0; x < n; ++x) f.image[x] = static_cast<int>((static_cast<long long>(k) * x) % n);
    return f;
}

bool is_automorphism(const FiniteGroup& G, const GroupAut& phi) {
    int n = G.order();
    if (static_cast<int>(phi.image.size()) != n) return false;
    std::vector<bool> hit(n, false);
    for (int x : phi.image) {
        if (x < 0 || x >= n || hit[x]) return false;
        hit[x] = true;
    }
    if (phi.image[G.identity()] != G.identity()) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (phi.image[G.op(a, b)] != G.op(phi.image[a], phi.image[b])) return false;
    return true;
}

GroupAut compose(const FiniteGroup& G, const GroupAut& f, const GroupAut& g) {
    GroupAut h;
    h.image.resize(G.order());
    for (int x = 0; x < G.order(); ++x) h.image[x] = f.image[g.image[x]];
    return h;
}

GroupAut inverse_aut(const FiniteGroup& G, const GroupAut& f) {
    GroupAut h;
    h.image.resize(G.order());
    for (int x = 0; x < G.order(); ++x) h.image[f.image[x]] = x;
    return h;
}

GroupAut conjugation_aut(const FiniteGroup& G, int g) {
    GroupAut h;
    h.image.resize(G.order());
    for (int x = 0; x < G.order(); ++x) h.image[x] = G.conj(g, x);
    return h;
}

// --- subgroup machinery ---

std::vector<int> subgroup_closure(const FiniteGroup& G, std::vector<int> gens) {
    std::vector<bool> in(G.order(), false);
    std::vector<int> queue;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = true;
            queue.push_back(x);
        }
    };
    add(G.identity());
    for (int g : gens) add(g);
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int g : gens) add(G.op(x, g));
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<int> normal_closure(const FiniteGroup& G, const std::vector<int>& seed) {
    if (seed.empty()) return {G.identity()};
    auto ggens = generating_set(G);
    // Grow a small generating set one escapee at a time (seed elements not yet
    // covered, then conjugates of generators that land outside); the subgroup
    // chain bounds the number of closure rounds.
    std::vector<int> gens;
    std::vector<int> H{G.identity()};
    std::vector<bool> in(G.order(), false);
    in[G.identity()] = true;
    for (;;) {
        int escaped = -1;
        for (int s : seed)
            if (!in[s]) {
                escaped = s;
                break;
            }
        if (escaped < 0) {
            for (int s : gens) {
                for (int g : ggens) {
                    int c = G.conj(g, s);
                    if (!in[c]) {
                        escaped = c;
                        break;
                    }
                }
                if (escaped >= 0) break;
            }
        }
        if (escaped < 0) return H;
        gens.push_back(escaped);
        H = subgroup_closure(G, gens);
        in.assign(G.order(), false);
        for (int x : H) in[x] = true;
    }
}

std::vector<int> generating_set(const FiniteGroup& G) {
    if (G.family() == Family::Cyclic)
        return G.order() == 1 ? std::vector<int>{} : std::vector<int>{1};
    std::vector<int> gens;
    std::vector<bool> in(G.order(), false);
    in[G.identity()] = true;
    int span_size = 1;
    while (span_size < G.order()) {
        int next = -1;
        for (int x = 0; x < G.order(); ++x)
            if (!in[x]) {
                next = x;
                break;
            }
        gens.push_back(next);
        auto span = subgroup_closure(G, gens);
        span_size = static_cast<int>(span.size());
        in.assign(G.order(), false);
        for (int x : span) in[x] = true;
    }
    return gens;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& set) {
    std::vector<bool> in(G.order(), false);
    for (int x : set) in[x] = true;
    if (!in[G.identity()]) return false;
    for (int a : set)
        for (int b : set)
            if (!in[G.op(a, b)]) return false;
    return true;
}

bool is_normal(const FiniteGroup& G, const std::vector<int>& subgroup) {
    std::vector<bool> in(G.order(), false);
    for (int x : subgroup) in[x] = true;
    for (int g = 0; g < G.order(); ++g)
        for (int h : subgroup)
            if (!in[G.conj(g, h)]) return false;
    return true;
}

std::vector<int> center(const FiniteGroup& G) {
    auto gens = generating_set(G);
    std::vector<int> z;
    for (int x = 0; x < G.order(); ++x) {
        bool central = true;
        for (int g : gens)
            if (G.op(x, g) != G.op(g, x)) {
                central = false;
                break;
            }
        if (central) z.push_back(x);
    }
    return z;
}

std::vector<int> commutator_subgroup(const FiniteGroup& G) {
    if (G.order() <= FiniteGroup::kTableCap) {
        std::vector<bool> seen(G.order(), false);
        std::vector<int> comms;
        for (int a = 0; a < G.order(); ++a)
            for (int b = 0; b < G.order(); ++b) {
                int c = G.op(G.op(a, b), G.op(G.inv(a), G.inv(b)));
                if (!seen[c]) {
                    seen[c] = true;
                    comms.push_back(c);
                }
            }
        return subgroup_closure(G, comms);
    }
    // big permutation groups: [G,G] = normal closure of generator commutators
    auto gens = generating_set(G);
    std::vector<int> seed;
    for (int a : gens)
        for (int b : gens) seed.push_back(G.op(G.op(a, b), G.op(G.inv(a), G.inv(b))));
    return normal_closure(G, seed);
}

std::pair<FiniteGroup, std::vector<int>> subgroup_as_group(const FiniteGroup& G,
                                                           const std::vector<int>& members) {
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    int k = static_cast<int>(sorted.size());
    std::map<int, int> local;
    for (int i = 0; i < k; ++i) local[sorted[i]] = i;
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) {
        labels[i] = G.label(sorted[i]);
        for (int j = 0; j < k; ++j) {
            auto it = local.find(G.op(sorted[i], sorted[j]));
            if (it == local.end()) throw ValidationError("member set is not closed");
            table[i][j] = it->second;
        }
    }
    return {FiniteGroup::from_table(table, labels), sorted};
}

FiniteGroup quotient_group(const FiniteGroup& G, const std::vector<int>& normal_subgroup) {
    std::vector<int> coset(G.order(), -1);
    std::vector<int> reps;
    for (int x = 0; x < G.order(); ++x) {
        if (coset[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : normal_subgroup) coset[G.op(x, h)] = c;
    }
    int k = static_cast<int>(reps.size());
    if (k > FiniteGroup::kTableCap)
        throw CapacityError("quotient order cap " + std::to_string(FiniteGroup::kTableCap) +
                            " exceeded");
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) {
        labels[i] = "[" + G.label(reps[i]) + "]";
        for (int j = 0; j < k; ++j) table[i][j] = coset[G.op(reps[i], reps[j])];
    }
    return FiniteGroup::from_table(table, labels);
}

// --- abelian decomposition ---

long long AbelianDecomposition::total_order() const {
    long long t = 1;
    for (const auto& f : factors) {
        long long pk = 1;
        for (int i = 0; i < f.k; ++i) pk *= f.p;
        for (int i = 0; i < f.r; ++i) t *= pk;
    }
    return t;
}

std::string AbelianDecomposition::to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors) {
        if (!first) os << " + ";
        first = false;
        long long pk = 1;
        for (int i = 0; i < f.k; ++i) pk *= f.p;
        if (f.r == 1)
            os << "Z" << pk;
        else
            os << "(Z" << pk << ")^" << f.r;
    }
    return os.str();
}

namespace {

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            int k = 0;
            while (n % p == 0) {
                n /= p;
                ++k;
            }
            out.emplace_back(p, k);
        }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

AbelianDecomposition decompose_abelian(const FiniteGroup& G) {
    if (!G.is_abelian()) throw ValidationError("decompose_abelian requires an abelian group");
    AbelianDecomposition d;
    if (G.order() == 1) return d;
    if (G.family() == Family::Cyclic) {
        for (auto [p, k] : factorize(G.order())) d.factors.push_back({p, k, 1});
        return d;
    }
    // Count solutions of x^{p^j} = e; in a p-group of type (Z_{p^l1}) + ... the
    // count is p^{sum min(li, j)}, which pins down the multiset {li}.
    std::vector<int> ord(G.order());
    for (int x = 0; x < G.order(); ++x) ord[x] = G.element_order(x);
    for (auto [p, v] : factorize(G.order())) {
        std::vector<int> g(v + 2, 0);  // g[j] = log_p #{x : ord(x) | p^j}
        for (int j = 0; j <= v + 1; ++j) {
            long long pj = 1;
            for (int i = 0; i < std::min(j, v); ++i) pj *= p;
            long long cnt = 0;
            for (int x = 0; x < G.order(); ++x)
                if (pj % ord[x] == 0) ++cnt;
            int lg = 0;
            while (cnt > 1) {
                cnt /= p;
                ++lg;
            }
            g[j] = lg;
        }
        for (int k = 1; k <= v; ++k) {
            int r = (g[k] - g[k - 1]) - (g[k + 1] - g[k]);
            if (r > 0) d.factors.push_back({p, k, r});
        }
    }
    std::sort(d.factors.begin(), d.factors.end(),
              [](const auto& a, const auto& b) { return std::tie(a.p, a.k) < std::tie(b.p, b.k); });
    return d;
}

AbelianDecomposition abelianization(const FiniteGroup& G) {
    if (G.is_abelian()) return decompose_abelian(G);
    return decompose_abelian(quotient_group(G, commutator_subgroup(G)));
}

// --- Sylow ---

SylowResult sylow(const FiniteGroup& G, long long p) {
    if (!is_prime(p)) throw ValidationError("sylow requires a prime");
    long long target = 1, n = G.order();
    while (n % p == 0) {
        n /= p;
        target *= p;
    }
    if (target == 1) return {{G.identity()}, true};

    // elements of p-power order
    std::vector<int> p_elements;
    for (int x = 0; x < G.order(); ++x) {
        int o = G.element_order(x);
        while (o % p == 0) o /= static_cast<int>(p);
        if (o == 1) p_elements.push_back(x);
    }

    std::vector<int> P{G.identity()};
    std::vector<int> Pgens;
    std::vector<bool> inP(G.order(), false);
    inP[G.identity()] = true;
    while (static_cast<long long>(P.size()) < target) {
        bool grew = false;
        for (int x : p_elements) {
            if (inP[x]) continue;
            // try extending; abort the closure as soon as it exceeds the target
            std::vector<int> gens = Pgens;
            gens.push_back(x);
            std::vector<bool> in(G.order(), false);
            std::vector<int> queue{G.identity()};
            in[G.identity()] = true;
            bool too_big = false;
            for (size_t head = 0; head < queue.size() && !too_big; ++head)
                for (int g : gens) {
                    int y = G.op(queue[head], g);
                    if (!in[y]) {
                        in[y] = true;
                        queue.push_back(y);
                        if (static_cast<long long>(queue.size()) > target) {
                            too_big = true;
                            break;
                        }
                    }
                }
            if (too_big) continue;
            long long sz = static_cast<long long>(queue.size());
            while (sz % p == 0) sz /= p;
            if (sz != 1) continue;
            P = std::move(queue);
            Pgens = gens;
            inP.assign(G.order(), false);
            for (int y : P) inP[y] = true;
            grew = true;
            break;
        }
        if (!grew) throw ValidationError("sylow search failed to grow (not a group?)");
    }
    std::sort(P.begin(), P.end());
    return {P, is_normal(G, P)};
}

// --- conjugacy classes ---

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
    auto gens = generating_set(G);
    std::vector<bool> done(G.order(), false);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < G.order(); ++x) {
        if (done[x]) continue;
        std::vector<int> orbit{x};
        done[x] = true;
        for (size_t head = 0; head < orbit.size(); ++head)
            for (int g : gens) {
                int y = G.conj(g, orbit[head]);
                if (!done[y]) {
                    done[y] = true;
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return classes;
}

// --- automorphism enumeration ---

namespace {

// DFS over images of a minimal generating set.  At each level the partial map
// is extended over the subgroup generated so far and checked for edge
// consistency and injectivity, which prunes hard and guarantees that a full
// assignment is an automorphism without a separate verification pass.
struct AutSearch {
    const FiniteGroup& G;
    std::vector<int> gens;
    std::vector<int> gen_order;
    std::vector<int> elem_order;
    const std::function<bool(const GroupAut&)>& fn;
    bool stopped = false;

    AutSearch(const FiniteGroup& g, const std::function<bool(const GroupAut&)>& f) : G(g), fn(f) {
        gens = generating_set(G);
        elem_order.resize(G.order());
        for (int x = 0; x < G.order(); ++x) elem_order[x] = G.element_order(x);
        for (int s : gens) gen_order.push_back(elem_order[s]);
    }

    // returns false if the search was stopped by the callback
    bool extend(size_t level, std::vector<int>& images) {
        if (level == gens.size()) {
            GroupAut phi;
            phi.image.assign(G.order(), -1);
            if (!build_map(images, phi.image)) return true;  // shouldn't happen
            if (!fn(phi)) {
                stopped = true;
                return false;
            }
            return true;
        }
        for (int t = 0; t < G.order(); ++t) {
            if (elem_order[t] != gen_order[level]) continue;
            images[level] = t;
            std::vector<int> map(G.order(), -1);
            if (build_map_partial(images, level + 1, map)) {
                if (!extend(level + 1, images)) return false;
            }
        }
        images[level] = -1;
        return true;
    }

    // Extends e -> e over <gens[0..count)> with images[0..count); returns
    // false on an inconsistency or injectivity failure.
    bool build_map_partial(const std::vector<int>& images, size_t count, std::vector<int>& map) {
        std::vector<int> queue{G.identity()};
        map[G.identity()] = G.identity();
        std::vector<int> preimage(G.order(), -1);
        preimage[G.identity()] = G.identity();
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (size_t i = 0; i < count; ++i) {
                int y = G.op(x, gens[i]);
                int fy = G.op(map[x], images[i]);
                if (map[y] == -1) {
                    if (preimage[fy] != -1) return false;  // not injective
                    map[y] = fy;
                    preimage[fy] = y;
                    queue.push_back(y);
                } else if (map[y] != fy) {
                    return false;  // not a homomorphism
                }
            }
        }
        return true;
    }

    bool build_map(const std::vector<int>& images, std::vector<int>& map) {
        return build_map_partial(images, images.size(), map) &&
               std::find(map.begin(), map.end(), -1) == map.end();
    }
};

}  // namespace

void for_each_automorphism(const FiniteGroup& G,
                           const std::function<bool(const GroupAut&)>& fn) {
    if (G.family() == Family::Cyclic) {
        int n = G.order();
        if (n == 1) {
            fn(identity_aut(G));
            return;
        }
        for (int k = 1; k < n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            if (!fn(unit_aut(G, k))) return;
        }
        return;
    }
    AutSearch search(G, fn);
    std::vector<int> images(search.gens.size(), -1);
    search.extend(0, images);
}

std::vector<GroupAut> automorphism_group(const FiniteGroup& G, int aut_cap) {
    if (G.family() != Family::Cyclic && G.order() > aut_cap)
        throw CapacityError("automorphism enumeration cap " + std::to_string(aut_cap) +
                            " exceeded (order " + std::to_string(G.order()) +
                            "); raise with --aut-cap");
    std::vector<GroupAut> out;
    for_each_automorphism(G, [&](const GroupAut& a) {
        out.push_back(a);
        return true;
    });
    return out;
}

bool outer_automorphisms_trivial(const FiniteGroup& G, int aut_cap) {
    auto auts = automorphism_group(G, aut_cap);
    auto z = center(G);
    return static_cast<long long>(auts.size()) * static_cast<long long>(z.size()) == G.order();
}

bool is_simple(const FiniteGroup& G) {
    if (G.order() == 1) return false;
    if (is_prime(G.order())) return true;
    for (const auto& cls : conjugacy_classes(G)) {
        if (cls.size() == 1 && cls[0] == G.identity()) continue;
        if (static_cast<int>(normal_closure(G, cls).size()) != G.order()) return false;
    }
    return true;
}

}  // namespace wreathlab
