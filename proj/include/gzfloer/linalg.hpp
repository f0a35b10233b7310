#pragma once

#include "gzfloer/rational.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace gzfloer {

// Row rank of an exact rational matrix (Gaussian elimination, no pivot scaling
// concerns since arithmetic is exact).
inline int matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// One linear condition a.x + b >= 0 (or > 0 when strict).
struct LinConstraint {
    std::vector<Rational> a;
    Rational b{0};
    bool strict = false;
};

namespace detail {

// Positive-scales (a, b) to a primitive integer vector so duplicates collapse.
inline void fm_normalize(LinConstraint& c) {
    Int l = 1;
    for (const auto& x : c.a) l = boost::multiprecision::lcm(l, den(x));
    l = boost::multiprecision::lcm(l, den(c.b));
    Int g = 0;
    auto acc = [&](const Rational& x) { g = boost::multiprecision::gcd(g, Int(num(x) * (l / den(x)))); };
    for (const auto& x : c.a) acc(x);
    acc(c.b);
    if (g == 0) return;
    Rational s = Rational(l, g);
    for (auto& x : c.a) x *= s;
    c.b *= s;
}

inline std::vector<LinConstraint> fm_dedupe(std::vector<LinConstraint> cs) {
    std::set<std::pair<std::vector<std::pair<Int, Int>>, bool>> seen;
    std::vector<LinConstraint> out;
    for (auto& c : cs) {
        fm_normalize(c);
        std::vector<std::pair<Int, Int>> key;
        key.reserve(c.a.size() + 1);
        for (const auto& x : c.a) key.emplace_back(num(x), den(x));
        key.emplace_back(num(c.b), den(c.b));
        if (seen.insert({std::move(key), c.strict}).second) out.push_back(std::move(c));
    }
    return out;
}

} // namespace detail

// Fourier-Motzkin elimination over exact rationals, strict-aware. Returns a
// point satisfying every constraint, or nullopt when the system is infeasible.
// Intended for the small chain-like systems that show up here; no subsumption
// beyond exact duplicate removal.
inline std::optional<std::vector<Rational>> fm_witness(std::vector<LinConstraint> cs, int dim) {
    for (const auto& c : cs)
        if (static_cast<int>(c.a.size()) != dim) throw std::invalid_argument("fm_witness: bad constraint width");

    // steps[k] holds the constraints live when variable k was eliminated.
    std::vector<std::vector<LinConstraint>> steps(dim);
    std::vector<LinConstraint> cur = detail::fm_dedupe(std::move(cs));
    for (int k = dim - 1; k >= 0; --k) {
        steps[k] = cur;
        std::vector<LinConstraint> next;
        std::vector<const LinConstraint*> lowers, uppers;
        for (const auto& c : cur) {
            if (c.a[k] > 0) lowers.push_back(&c);
            else if (c.a[k] < 0) uppers.push_back(&c);
            else next.push_back(c);
        }
        for (const auto* lo : lowers) {
            for (const auto* up : uppers) {
                LinConstraint comb;
                comb.a.resize(dim, Rational(0));
                Rational p = lo->a[k], q = up->a[k]; // p > 0, q < 0
                for (int j = 0; j < dim; ++j) comb.a[j] = (-q) * lo->a[j] + p * up->a[j];
                comb.b = (-q) * lo->b + p * up->b;
                comb.strict = lo->strict || up->strict;
                next.push_back(std::move(comb));
            }
        }
        for (auto& c : next) c.a[k] = 0;
        cur = detail::fm_dedupe(std::move(next));
    }
    for (const auto& c : cur) {
        if (c.b < 0 || (c.strict && c.b == 0)) return std::nullopt;
    }

    std::vector<Rational> x(dim, Rational(0));
    for (int k = 0; k < dim; ++k) {
        std::optional<Rational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& c : steps[k]) {
            if (c.a[k] == 0) continue;
            Rational rest = c.b;
            for (int j = 0; j < k; ++j) rest += c.a[j] * x[j];
            Rational bound = -rest / c.a[k];
            if (c.a[k] > 0) {
                if (!lo || bound > *lo) {
                    lo = bound;
                    lo_strict = c.strict;
                } else if (bound == *lo) {
                    lo_strict = lo_strict || c.strict;
                }
            } else {
                if (!hi || bound < *hi) {
                    hi = bound;
                    hi_strict = c.strict;
                } else if (bound == *hi) {
                    hi_strict = hi_strict || c.strict;
                }
            }
        }
        if (lo && hi) {
            if (*lo == *hi) x[k] = *lo;
            else x[k] = (*lo + *hi) / 2;
        } else if (lo) {
            x[k] = lo_strict ? *lo + 1 : *lo;
        } else if (hi) {
            x[k] = hi_strict ? *hi - 1 : *hi;
        }
    }
    return x;
}

inline bool fm_feasible(std::vector<LinConstraint> cs, int dim) {
    return fm_witness(std::move(cs), dim).has_value();
}

} // namespace gzfloer
