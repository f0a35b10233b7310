#pragma once

// Independent reference computations and frozen fixtures used by the test
// suite. Everything here is derived directly from the defining inequality
// system / equation displays, on purpose without going through the library
// modules under test (only the exact-arithmetic kernel headers are used).

#include "gzfloer/complex_rational.hpp"
#include "gzfloer/linalg.hpp"
#include "gzfloer/rational.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using gzfloer::ComplexRational;
using gzfloer::Int;
using gzfloer::LinConstraint;
using gzfloer::Rational;

// ---------------------------------------------------------------------------
// Lattice-path walker on the L-shaped region (column [0,1]x[0,n] union row
// [0,n]x[0,1]), independent of the graph module's path formula.
// ---------------------------------------------------------------------------

// An edge lies in the region iff it bounds one of the 2n-1 unit boxes
// [0,1]x[j-1,j] (j = 1..n) or [i-1,i]x[0,1] (i = 1..n).
inline bool region_has_edge(int n, int x, int y, char dir) {
    if (dir == 'h')
        return (x == 0 && y >= 0 && y <= n) || (x >= 0 && x <= n - 1 && (y == 0 || y == 1));
    return ((x == 0 || x == 1) && y >= 0 && y <= n - 1) || (y == 0 && x >= 0 && x <= n);
}

inline void walk_monotone(int n, int x, int y, int tx, int ty, long& count) {
    if (x == tx && y == ty) {
        ++count;
        return;
    }
    if (x < tx && region_has_edge(n, x, y, 'h')) walk_monotone(n, x + 1, y, tx, ty, count);
    if (y < ty && region_has_edge(n, x, y, 'v')) walk_monotone(n, x, y + 1, tx, ty, count);
}

// All monotone lattice paths from (0,0) to (1,n) plus those to (n,1).
inline long count_positive_paths(int n) {
    long c = 0;
    walk_monotone(n, 0, 0, 1, n, c);
    walk_monotone(n, 0, 0, n, 1, c);
    return c;
}

// ---------------------------------------------------------------------------
// Exhaustive face oracle: scan every subset of the 2n+2 interlacing
// inequalities, test exact feasibility of "tight on S, strict off S" with
// Fourier-Motzkin, and record the face as (equality partition, dimension).
//
// Node ids: 0 = lambda1; 1..n = u_{1,n}..u_{1,1}; n+1 = lambda2;
// n+2..2n = u_{2,1}..u_{n,1}; 2n+1 = lambda3.
// Variable ids: 0..n-1 = u_{1,1}..u_{1,n}; n..2n-2 = u_{2,1}..u_{n,1}.
// ---------------------------------------------------------------------------

inline int node_count(int n) { return 2 * n + 2; }

inline std::string node_label(int n, int id) {
    if (id == 0) return "lambda1";
    if (id == n + 1) return "lambda2";
    if (id == 2 * n + 1) return "lambda3";
    if (id >= 1 && id <= n) return "u_{1," + std::to_string(n + 1 - id) + "}";
    return "u_{" + std::to_string(id - n) + ",1}";
}

// (coefficients over the 2n-1 coordinates, constant part) of a node's value.
inline std::pair<std::vector<Rational>, Rational>
node_affine(int n, int id, const Rational& l1, const Rational& l2, const Rational& l3) {
    std::vector<Rational> a(2 * n - 1, Rational(0));
    if (id == 0) return {a, l1};
    if (id == n + 1) return {a, l2};
    if (id == 2 * n + 1) return {a, l3};
    if (id >= 1 && id <= n) a[n - id] = 1;
    else a[id - 2] = 1;
    return {a, Rational(0)};
}

// The 2n+2 inequalities "value(first) >= value(second)" in canonical order.
inline std::vector<std::pair<int, int>> inequality_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.emplace_back(0, 1);
    for (int i = 1; i <= n - 1; ++i) pairs.emplace_back(i, i + 1);
    pairs.emplace_back(n - 1, n + 1);
    pairs.emplace_back(n, n + 2);
    pairs.emplace_back(n + 1, n + 2);
    for (int k = 2; k <= n - 1; ++k) pairs.emplace_back(n + k, n + k + 1);
    pairs.emplace_back(2 * n, 2 * n + 1);
    return pairs;
}

// Canonical face key: sorted equality classes of node ids (size >= 2 only).
using FaceKey = std::vector<std::vector<int>>;

inline FaceKey partition_from_tight(int n, const std::vector<std::pair<int, int>>& tight_pairs) {
    std::vector<int> parent(node_count(n));
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : tight_pairs) parent[find(a)] = find(b);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < node_count(n); ++v) groups[find(v)].push_back(v);
    FaceKey key;
    for (auto& [root, members] : groups) {
        if (members.size() < 2) continue;
        std::sort(members.begin(), members.end());
        key.push_back(members);
    }
    std::sort(key.begin(), key.end());
    return key;
}

struct OracleFace {
    FaceKey key;
    int dimension;
    std::vector<int> active; // tight inequality indices, ascending
};

// Every nonempty face of the polytope, keyed by its exact active set. Asserts
// the partition keys are pairwise distinct (one face per key).
inline std::vector<OracleFace>
enumerate_faces_exhaustive(int n, const Rational& l1, const Rational& l2, const Rational& l3) {
    const auto pairs = inequality_pairs(n);
    const int m = static_cast<int>(pairs.size());
    const int dim = 2 * n - 1;
    std::vector<OracleFace> faces;
    std::set<FaceKey> seen;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        std::vector<LinConstraint> cs;
        std::vector<std::pair<int, int>> tight;
        std::vector<int> active;
        for (int i = 0; i < m; ++i) {
            auto [pa, ca] = node_affine(n, pairs[i].first, l1, l2, l3);
            auto [pb, cb] = node_affine(n, pairs[i].second, l1, l2, l3);
            LinConstraint c;
            c.a.resize(dim);
            for (int j = 0; j < dim; ++j) c.a[j] = pa[j] - pb[j];
            c.b = ca - cb;
            if (mask & (1ul << i)) {
                LinConstraint neg = c;
                for (auto& x : neg.a) x = -x;
                neg.b = -neg.b;
                cs.push_back(c);
                cs.push_back(neg);
                tight.push_back(pairs[i]);
                active.push_back(i);
            } else {
                c.strict = true;
                cs.push_back(c);
            }
        }
        if (!gzfloer::fm_feasible(cs, dim)) continue;
        std::vector<std::vector<Rational>> rows;
        for (auto [a, b] : tight) {
            auto [pa, ca] = node_affine(n, a, l1, l2, l3);
            auto [pb, cb] = node_affine(n, b, l1, l2, l3);
            std::vector<Rational> row(dim);
            for (int j = 0; j < dim; ++j) row[j] = pa[j] - pb[j];
            rows.push_back(std::move(row));
        }
        OracleFace f;
        f.key = partition_from_tight(n, tight);
        f.dimension = dim - gzfloer::matrix_rank(rows);
        f.active = active;
        assert(seen.insert(f.key).second && "two active sets produced one partition");
        faces.push_back(std::move(f));
    }
    return faces;
}

// ---------------------------------------------------------------------------
// Split leading-term system, written out longhand over C (the 2n+1 equations
// displayed before the extension argument), as a pure substitution check.
// Variables: y1[j] = y_{1,j} (j = 1..n), yc[j] = y_{j,1} (j = 2..n).
// ---------------------------------------------------------------------------

struct SplitAssignment {
    std::map<int, ComplexRational> y_row;  // j in [1,n]
    std::map<int, ComplexRational> y_col;  // j in [2,n]
    ComplexRational c, c_under, a, a_under;
};

inline std::vector<ComplexRational> split_residuals_longhand(int n, const SplitAssignment& s) {
    auto yr = [&](int j) { return s.y_row.at(j); };
    auto yc = [&](int j) { return s.y_col.at(j); };
    std::vector<ComplexRational> out;
    // corner system in y_{1,1}, y_{1,2}, y_{2,1}
    out.push_back(ComplexRational(0) - yr(2) / yr(1) + yr(1) / yc(2));             // d/d y11
    out.push_back(yr(2) / yr(1) + yr(2));                                          // d/d y12
    out.push_back(ComplexRational(0) - yr(1) / yc(2) - ComplexRational(1) / yc(2)); // d/d y21
    // row system in y_{1,2}..y_{1,n}: c/y_{1,n} + sum y_{1,j}/y_{1,j-1} + a y_{1,2}
    for (int j = 2; j <= n; ++j) {
        ComplexRational r(0);
        if (j >= 3) r += yr(j) / yr(j - 1);
        else r += s.a * yr(2);
        if (j + 1 <= n) r -= yr(j + 1) / yr(j);
        else r -= s.c / yr(n);
        out.push_back(r);
    }
    // column system in y_{2,1}..y_{n,1}: c_under y_{n,1} + sum y_{j,1}/y_{j+1,1} + a_under/y_{2,1}
    for (int j = 2; j <= n; ++j) {
        ComplexRational r(0);
        if (j >= 3) r -= yc(j - 1) / yc(j);
        else r -= s.a_under / yc(2);
        if (j + 1 <= n) r += yc(j) / yc(j + 1);
        else r += s.c_under * yc(n);
        out.push_back(r);
    }
    return out;
}

// Closed-form split solution being certified everywhere.
inline SplitAssignment expected_split_solution(int n) {
    SplitAssignment s;
    s.y_row[1] = ComplexRational(-1);
    for (int j = 2; j <= n; ++j) s.y_row[j] = ComplexRational((j % 2 == 0) ? -1 : 1);
    for (int j = 2; j <= n; ++j) s.y_col[j] = ComplexRational(-1);
    s.c = ComplexRational((n % 2 == 0) ? 1 : -1);
    s.c_under = ComplexRational(-1);
    s.a = ComplexRational(1);
    s.a_under = ComplexRational(-1);
    return s;
}

// ---------------------------------------------------------------------------
// Closed-form Novikov extension (independent series, binomial coefficients):
//   y_{1,1} = y_{1,2} = y_{2,1} = -1 - T^{nt}
//   y_{1,j} = (-1)^{j-1} (1 + T^{nt})          for j >= 2  (note j=2 agrees)
//   y_{j,1} = -(1 + T^{nt})^{j-1}              for j >= 2
//   c       = (-1)^n (1 + T^{nt})
//   c_under = -(1 + T^{nt})^{-n} = -sum_k (-1)^k C(n+k-1,k) T^{k n t}
// Represented as sparse exponent->coefficient maps, truncated below `trunc`.
// ---------------------------------------------------------------------------

using Series = std::map<Rational, ComplexRational>;

inline Series one_plus_T_power(long e, const Rational& step, const Rational& trunc) {
    // (1 + T^step)^e for e >= 0 (finite binomial sum), truncated.
    Series s;
    for (long k = 0; k <= e; ++k) {
        Rational ex = step * k;
        if (ex >= trunc) break;
        s[ex] = ComplexRational(Rational(gzfloer::binomial(e, k)));
    }
    return s;
}

inline Series scale_series(Series s, const ComplexRational& f) {
    for (auto& [e, c] : s) c = c * f;
    return s;
}

inline Series expected_c_under(int n, const Rational& nt, const Rational& trunc) {
    Series s;
    for (long k = 0;; ++k) {
        Rational ex = nt * k;
        if (ex >= trunc) break;
        Rational coef = Rational(gzfloer::binomial(n + k - 1, k)) * ((k % 2 == 0) ? 1 : -1);
        s[ex] = ComplexRational(-coef);
    }
    return s;
}

struct ExpectedExtension {
    std::map<int, Series> y_row;
    std::map<int, Series> y_col;
    Series c, c_under;
};

inline ExpectedExtension expected_extension(int n, const Rational& t, const Rational& trunc) {
    Rational nt = t * n;
    ExpectedExtension e;
    Series seed = one_plus_T_power(1, nt, trunc);
    e.y_row[1] = scale_series(seed, ComplexRational(-1));
    for (int j = 2; j <= n; ++j)
        e.y_row[j] = scale_series(seed, ComplexRational((j % 2 == 0) ? -1 : 1));
    for (int j = 2; j <= n; ++j)
        e.y_col[j] = scale_series(one_plus_T_power(j - 1, nt, trunc), ComplexRational(-1));
    e.c = scale_series(seed, ComplexRational((n % 2 == 0) ? 1 : -1));
    e.c_under = expected_c_under(n, nt, trunc);
    return e;
}

// ---------------------------------------------------------------------------
// Frozen fixtures.
// ---------------------------------------------------------------------------

// Positive path counts.
inline constexpr long kPathCount2 = 6;
inline constexpr long kPathCount3 = 8;

// Number of nonempty faces of the n=2 polytope (7 vertices, 11 edges,
// 6 facets, 1 improper).
inline constexpr int kFaceCount2 = 25;

// n=2 vertex coordinates (u11, u12, u21) at lambda = (2, 0, -2).
inline const std::vector<std::array<int, 3>> kVertices2 = {
    {{0, 2, 0}}, {{2, 2, 0}}, {{2, 2, -2}}, {{-2, 2, -2}},
    {{0, 0, 0}}, {{0, 0, -2}}, {{-2, 0, -2}},
};

// The three worked n=3 subgraphs: edge lists as (dir, x, y).
struct EdgeTriple {
    char dir;
    int x, y;
    auto operator<=>(const EdgeTriple&) const = default;
};

// Full Gamma_3: 16 edges.
inline const std::vector<EdgeTriple> kGamma3AllEdges = {
    {'h', 0, 0}, {'h', 0, 1}, {'h', 0, 2}, {'h', 0, 3},
    {'h', 1, 0}, {'h', 1, 1}, {'h', 2, 0}, {'h', 2, 1},
    {'v', 0, 0}, {'v', 0, 1}, {'v', 0, 2},
    {'v', 1, 0}, {'v', 1, 1}, {'v', 1, 2},
    {'v', 2, 0}, {'v', 3, 0},
};

inline std::vector<EdgeTriple> gamma3_minus(const std::vector<EdgeTriple>& removed) {
    std::vector<EdgeTriple> out;
    for (const auto& e : kGamma3AllEdges)
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) out.push_back(e);
    return out;
}

// Fixture A: Gamma_3 minus {h(0,1), v(1,0), v(1,1), h(1,1)}; dimension 2;
// equalities u_{1,2} = u_{1,1} = u_{2,1} = lambda2.
inline std::vector<EdgeTriple> fixtureA_edges() {
    return gamma3_minus({{'h', 0, 1}, {'v', 1, 0}, {'v', 1, 1}, {'h', 1, 1}});
}
inline constexpr int kFixtureA_dim = 2;

// Fixture B: the union of the two extreme positive paths; dimension 0;
// equalities u_{1,3} = u_{1,2} = u_{1,1} = u_{2,1} = u_{3,1} = lambda2.
inline std::vector<EdgeTriple> fixtureB_edges() {
    return {{'v', 0, 0}, {'v', 0, 1}, {'v', 0, 2}, {'h', 0, 3},
            {'h', 0, 0}, {'h', 1, 0}, {'h', 2, 0}, {'v', 3, 0}};
}
inline constexpr int kFixtureB_dim = 0;

// Fixture C: Gamma_3 minus {v(0,2), h(0,3)}; dimension 4; equality u_{1,3} = lambda1.
inline std::vector<EdgeTriple> fixtureC_edges() {
    return gamma3_minus({{'v', 0, 2}, {'h', 0, 3}});
}
inline constexpr int kFixtureC_dim = 4;

// Expected equality classes for the fixtures, as node-id partitions (n=3):
// ids: 0 l1, 1 u13, 2 u12, 3 u11, 4 l2, 5 u21, 6 u31, 7 l3.
inline const FaceKey kFixtureA_key = {{2, 3, 4, 5}};
inline const FaceKey kFixtureB_key = {{1, 2, 3, 4, 5, 6}};
inline const FaceKey kFixtureC_key = {{0, 1}};

// Distinguished points, lambda per the standard monotone choice.
// monotone_point(3,0) and (3,1); u1(3); segment at t=1/2.
inline const std::vector<int> kMonotone30 = {0, 2, 4, -2, -4};
inline const std::vector<int> kMonotone31 = {0, 0, 4, 0, -4};
inline const std::vector<int> kU1_n3 = {0, 0, 3, 0, -3};
// (0, 1, 7/2, -1, -7/2) stored as halves.
inline const std::vector<int> kSegmentHalf_n3_times2 = {0, 2, 7, -2, -7};

// n=3 potential supports in construction order; -1/+1 exponents keyed by
// variable name; the T-exponent class L/H and whether the coefficient carries
// c or c_under.
struct MonomialFixture {
    std::vector<std::pair<std::string, int>> exps;
    char order;  // 'L' or 'H'
    char bulk;   // ' ', 'c', or 'u' (c_under)
};
inline const std::vector<MonomialFixture> kPotential3 = {
    {{{"y_{1,2}", 1}, {"y_{1,1}", -1}}, 'L', ' '},
    {{{"y_{1,2}", 1}}, 'L', ' '},
    {{{"y_{1,1}", 1}, {"y_{2,1}", -1}}, 'L', ' '},
    {{{"y_{2,1}", -1}}, 'L', ' '},
    {{{"y_{1,3}", -1}}, 'H', 'c'},
    {{{"y_{1,3}", 1}, {"y_{1,2}", -1}}, 'H', ' '},
    {{{"y_{3,1}", 1}}, 'H', 'u'},
    {{{"y_{2,1}", 1}, {"y_{3,1}", -1}}, 'H', ' '},
};

// n=3 stratification of g: (i, sphere_dim) in report order.
inline const std::vector<std::pair<int, int>> kStrata3 = {{0, 0}, {0, 3}, {1, 3}};

} // namespace oracle
