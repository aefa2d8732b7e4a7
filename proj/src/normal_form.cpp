#include "wreathlab/normal_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace wreathlab {

namespace {

void require_cyclic(const WreathGroup& W) {
    if (W.base().family() != Family::Cyclic)
        throw std::domain_error("normal forms and the word-length formula are defined for "
                                "cyclic base groups only");
}

}  // namespace

NormalForm normal_form(const WreathGroup& W, const WreathElement& g, NormalFormSide side) {
    require_cyclic(W);
    int n = W.lamp_order();
    int h = n / 2;
    NormalForm nf;
    nf.side = side;
    nf.shift = g.shift;
    nf.lamp_order = n;
    for (auto [pos, v] : g.lamps.entries()) {
        int e = v <= h ? v : v - n;  // for even n this keeps +h and never emits -h
        if (pos >= 0)
            nf.nonneg.emplace_back(pos, e);
        else
            nf.neg.emplace_back(pos, e);
    }
    // entries() is sorted ascending; rf word order wants neg indices descending
    std::reverse(nf.neg.begin(), nf.neg.end());
    return nf;
}

Word to_word(const NormalForm& nf) {
    Word w;
    w.gens = GenSet::AT;
    w.lamp_order = nf.lamp_order;
    int cursor = 0;
    auto move_to = [&](int pos) {
        while (cursor < pos) {
            w.tokens.push_back({0, +1});
            ++cursor;
        }
        while (cursor > pos) {
            w.tokens.push_back({0, -1});
            --cursor;
        }
    };
    auto fire = [&](int e) {
        int sign = e >= 0 ? +1 : -1;
        for (int i = 0; i < std::abs(e); ++i) w.tokens.push_back({-1, sign});
    };
    auto right_part = [&] {
        for (auto [pos, e] : nf.nonneg) {
            move_to(pos);
            fire(e);
        }
    };
    auto left_part = [&] {
        for (auto [pos, e] : nf.neg) {
            move_to(pos);
            fire(e);
        }
    };
    if (nf.side == NormalFormSide::RF) {
        right_part();
        left_part();
    } else {
        left_part();
        right_part();
    }
    move_to(nf.shift);
    return w;
}

std::string to_string(const NormalForm& nf) {
    std::ostringstream os;
    auto emit = [&](const std::vector<std::pair<int, int>>& part) {
        for (auto [pos, e] : part) {
            os << "a[" << pos << "]";
            if (e != 1) os << "^" << e;
            os << " ";
        }
    };
    if (nf.side == NormalFormSide::RF) {
        emit(nf.nonneg);
        emit(nf.neg);
    } else {
        emit(nf.neg);
        emit(nf.nonneg);
    }
    os << "t^" << nf.shift;
    return os.str();
}

int word_length_ct(const WreathGroup& W, const WreathElement& g) {
    require_cyclic(W);
    NormalForm nf = normal_form(W, g);
    int lamp_cost = 0;
    for (auto [pos, e] : nf.nonneg) {
        (void)pos;
        lamp_cost += std::abs(e);
    }
    for (auto [pos, e] : nf.neg) {
        (void)pos;
        lamp_cost += std::abs(e);
    }
    int ik = nf.nonneg.empty() ? 0 : nf.nonneg.back().first;
    int jl = nf.neg.empty() ? 0 : -nf.neg.back().first;
    int m = nf.shift;
    int rf_cost = 2 * jl + ik + std::abs(m - ik);
    int lf_cost = 2 * ik + jl + std::abs(m + jl);
    return lamp_cost + std::min(rf_cost, lf_cost);
}

}  // namespace wreathlab
