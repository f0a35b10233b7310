#pragma once

#include "gzfloer/polytope.hpp"
#include "gzfloer/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzfloer {

// One machine-checked comparison from the dimension bookkeeping.
struct CheckItem {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    std::string relation; // "==", "<=", "<"
    bool pass = false;
};

inline CheckItem make_check(std::string name, long long lhs, long long rhs, std::string rel) {
    CheckItem c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    bool ok = rel == "==" ? lhs == rhs : rel == "<=" ? lhs <= rhs : lhs < rhs;
    c.relation = std::move(rel);
    c.pass = ok;
    return c;
}

inline bool all_pass(const std::vector<CheckItem>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const CheckItem& c) { return c.pass; });
}

// One face of g together with the topology of the torus-bundle fibers over
// its relative interior. total_fiber_dim is the dimension of the preimage of
// the open stratum: the face dimension plus the fiber dimension.
struct StratumReport {
    std::string name; // g_{i,j}
    FaceDescriptor face;
    std::vector<int> active;
    int i = 0;
    int sphere_dim = 0;
    int torus_rank = 0;
    int total_fiber_dim = 0;
    GZPoint witness;
};

// Tight inequality indices cutting out g = f cap {u_{1,1}=u_{1,2}=u_{2,1}=0}
// with f = {u_{1,n} = lambda1}: the top cap plus the four equalities the zero
// block forces among adjacent pairs.
inline std::vector<int> g_base_active(int n) { return {0, n - 1, n, n + 1, n + 2}; }

// All faces of g, ascending by (dimension, tight set), named g_{i,j} with j
// counting within each dimension.
inline std::vector<StratumReport> g_stratification(int n) {
    if (n < 3) throw std::invalid_argument("g_stratification: need n >= 3");
    GZPolytope poly(n, Weight::standard(n));
    const auto base = g_base_active(n);
    std::vector<int> free_idx;
    for (int i = 0; i < poly.num_inequalities(); ++i)
        if (std::find(base.begin(), base.end(), i) == base.end()) free_idx.push_back(i);

    std::vector<StratumReport> out;
    for (unsigned long mask = 0; mask < (1ul << free_idx.size()); ++mask) {
        std::vector<int> active = base;
        for (std::size_t k = 0; k < free_idx.size(); ++k)
            if (mask & (1ul << k)) active.push_back(free_idx[k]);
        std::sort(active.begin(), active.end());
        auto w = poly.relint_point(active);
        if (!w) continue; // pattern is not exactly realized
        StratumReport s;
        s.active = std::move(active);
        s.witness = *w;
        s.face = poly.face_from_active(s.active);
        s.i = s.face.dimension;
        auto ft = poly.fiber_type(s.witness);
        s.sphere_dim = ft.sphere_dim;
        s.torus_rank = ft.torus_rank;
        s.total_fiber_dim = s.i + s.sphere_dim + s.torus_rank;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const StratumReport& a, const StratumReport& b) {
        return a.i != b.i ? a.i < b.i : a.active < b.active;
    });
    int prev_i = -1, j = 0;
    for (auto& s : out) {
        j = s.i == prev_i ? j + 1 : 1;
        prev_i = s.i;
        s.name = "g_{" + std::to_string(s.i) + "," + std::to_string(j) + "}";
    }
    return out;
}

// The codimension-3 ledger: dim M, dim f, dim g, the preimage dimension over
// relint(g), and the named comparisons tying them together.
struct BoundaryReport {
    int n = 0;
    int dim_M = 0;
    int dim_f = 0;
    int dim_g = 0;
    int preimage_dim = 0;
    int codim = 0;
    std::vector<CheckItem> checks;
    bool all_pass = false;
};

inline BoundaryReport boundary_report(int n) {
    if (n < 3) throw std::invalid_argument("boundary_report: need n >= 3");
    GZPolytope poly(n, Weight::standard(n));
    BoundaryReport r;
    r.n = n;
    r.dim_M = 4 * n - 4;
    r.dim_f = poly.face_dimension({0});
    const auto gact = g_base_active(n);
    r.dim_g = poly.face_dimension(gact);
    auto w = poly.relint_point(gact);
    if (!w) throw std::logic_error("boundary_report: g pattern infeasible");
    auto ft = poly.fiber_type(*w);
    r.preimage_dim = r.dim_g + ft.sphere_dim + ft.torus_rank;
    r.codim = r.dim_M - r.preimage_dim;

    r.checks.push_back(make_check("dim_f == 2n-2", r.dim_f, 2 * n - 2, "=="));
    r.checks.push_back(make_check("dim_g == dim_f - 3", r.dim_g, r.dim_f - 3, "=="));
    r.checks.push_back(make_check("dim_g == 2n-5", r.dim_g, 2 * n - 5, "=="));
    r.checks.push_back(make_check("sphere over relint(g) is S^3", ft.sphere_dim, 3, "=="));
    r.checks.push_back(make_check("torus rank over relint(g) == dim_g", ft.torus_rank, r.dim_g, "=="));
    r.checks.push_back(make_check("preimage_dim == 2*dim_g + 3", r.preimage_dim, 2 * r.dim_g + 3, "=="));
    r.checks.push_back(make_check("preimage_dim == 4n-7", r.preimage_dim, 4 * n - 7, "=="));
    r.checks.push_back(make_check("codim == 3", r.codim, 3, "=="));
    r.all_pass = gzfloer::all_pass(r.checks);
    return r;
}

// Per-stratum collar estimate: the product of the linking sphere S^{i-1},
// the fiber sphere factor, and the base torus stays under 4n-7. Strata with
// i = 0 carry no collar (S^{-1} is empty) and are skipped.
inline std::vector<CheckItem> intersection_bound_check(int n) {
    std::vector<CheckItem> out;
    for (const auto& s : g_stratification(n)) {
        if (s.i == 0) continue;
        out.push_back(make_check(s.name + ": dim(S^{i-1} x S x T^i) <= (i-1)+(2n-1)",
                                 (s.i - 1) + s.sphere_dim + s.torus_rank,
                                 (s.i - 1) + (2 * n - 1), "<="));
        out.push_back(make_check(s.name + ": (i-1)+(2n-1) <= 4n-7",
                                 (s.i - 1) + (2 * n - 1), 4 * n - 7, "<="));
    }
    return out;
}

// Betti number of S^sphere x T^torus in degree ell (sphere 0 means a point
// factor).
inline long long kunneth_betti(int torus, int sphere, int ell) {
    Int b = binomial(torus, ell);
    if (sphere > 0) b += binomial(torus, ell - sphere);
    return b.convert_to<long long>();
}

// For every stratum the fiber homology is concentrated strictly below 4n-7:
// top degree bound plus the literal vanishing of the Betti tail.
inline std::vector<CheckItem> kunneth_check(int n) {
    std::vector<CheckItem> out;
    for (const auto& s : g_stratification(n)) {
        int top = s.sphere_dim + s.torus_rank;
        out.push_back(make_check(s.name + ": top Betti degree < 4n-7", top, 4 * n - 7, "<"));
        long long tail = 0;
        for (int l = 4 * n - 7; l <= top; ++l) tail += kunneth_betti(s.torus_rank, s.sphere_dim, l);
        out.push_back(make_check(s.name + ": sum of b_l for l >= 4n-7 == 0", tail, 0, "=="));
    }
    return out;
}

struct StrataReport {
    int n = 0;
    BoundaryReport boundary;
    std::vector<StratumReport> strata;
    std::vector<CheckItem> intersection;
    std::vector<CheckItem> kunneth;
    bool all_pass = false;
};

inline StrataReport full_strata_report(int n) {
    StrataReport r;
    r.n = n;
    r.boundary = boundary_report(n);
    r.strata = g_stratification(n);
    r.intersection = intersection_bound_check(n);
    r.kunneth = kunneth_check(n);
    r.all_pass = r.boundary.all_pass && gzfloer::all_pass(r.intersection) &&
                 gzfloer::all_pass(r.kunneth);
    return r;
}

} // namespace gzfloer
