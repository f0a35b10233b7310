#pragma once

#include "gzfloer/complex_rational.hpp"
#include "gzfloer/face.hpp"
#include "gzfloer/linalg.hpp"
#include "gzfloer/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gzfloer {

// Strictly dominant triple the polytope is built from. All coordinates are
// lambda2-centered: the translation in the eigenvalue picture is already
// absorbed, so the default weight has lambda2 = 0 and nothing is ever shifted.
struct Weight {
    Rational lambda1, lambda2, lambda3;

    Weight(Rational l1, Rational l2, Rational l3)
        : lambda1(std::move(l1)), lambda2(std::move(l2)), lambda3(std::move(l3)) {
        if (!(lambda1 > lambda2 && lambda2 > lambda3))
            throw std::invalid_argument("Weight: need lambda1 > lambda2 > lambda3");
    }

    static Weight standard(int n) {
        if (n < 2) throw std::invalid_argument("Weight::standard: need n >= 2");
        Rational top = Rational(n) * Rational(n - 1);
        return Weight(top, Rational(0), -top);
    }
};

// A candidate point: u_{1,1..n} then u_{2..n,1}. Membership is a query, not
// an invariant.
struct GZPoint {
    std::vector<Rational> u_row;
    std::vector<Rational> u_col;

    friend bool operator==(const GZPoint&, const GZPoint&) = default;
};

// Topology of one torus-bundle fiber: an odd sphere factor (0 = point) times
// a torus of the face dimension.
struct FiberType {
    int sphere_dim = 0;
    int torus_rank = 0;
    bool is_lagrangian = false;

    std::string description() const {
        std::string s = sphere_dim > 0 ? "S^" + std::to_string(sphere_dim) : "pt";
        s += " x T^" + std::to_string(torus_rank);
        s += is_lagrangian ? " (Lagrangian)" : " (isotropic)";
        return s;
    }
};

// Homogeneous coordinates of the two projective factors, p_1..p_{n+1} and
// p_{1bar}..p_{n+1bar}.
struct PluckerVector {
    std::vector<ComplexRational> p;
    std::vector<ComplexRational> p_under;
};

class GZPolytope {
public:
    GZPolytope(int n, Weight w) : n_(n), w_(std::move(w)), pairs_(interlacing_pairs(n)) {
        if (n < 2) throw std::invalid_argument("GZPolytope: need n >= 2");
    }

    int n() const { return n_; }
    const Weight& weight() const { return w_; }
    int num_inequalities() const { return static_cast<int>(pairs_.size()); }

    // Value of a chain node at u: the three weights are constants, the rest
    // read off coordinates (node ids as in face_node_name).
    Rational node_value(const GZPoint& u, int id) const {
        if (id == 0) return w_.lambda1;
        if (id == n_ + 1) return w_.lambda2;
        if (id == 2 * n_ + 1) return w_.lambda3;
        if (id >= 1 && id <= n_) return u.u_row[n_ - id];
        if (id >= n_ + 2 && id <= 2 * n_) return u.u_col[id - n_ - 2];
        throw std::invalid_argument("node_value: bad node id");
    }

    bool contains(const GZPoint& u) const {
        check_shape(u);
        for (auto [a, b] : pairs_)
            if (node_value(u, a) < node_value(u, b)) return false;
        return true;
    }

    // Indices (into the canonical inequality order) holding with equality.
    std::vector<int> active_set(const GZPoint& u) const {
        require_member(u);
        std::vector<int> active;
        for (int i = 0; i < num_inequalities(); ++i)
            if (node_value(u, pairs_[i].first) == node_value(u, pairs_[i].second))
                active.push_back(i);
        return active;
    }

    FaceDescriptor active_face(const GZPoint& u) const { return face_from_active(active_set(u)); }

    // The unique j in [1, n-1] whose equality block is active with strict
    // drop-off on both sides, sentinels u_{1,n+1} = lambda1, u_{n+1,1} =
    // lambda3. None when the sphere factor is a point.
    std::optional<int> condition_j(const GZPoint& u) const {
        require_member(u);
        for (int j = 1; j <= n_ - 1; ++j) {
            bool flat = true;
            for (int k = 1; k <= j + 1 && flat; ++k) flat = u.u_row[k - 1] == w_.lambda2;
            for (int k = 2; k <= j + 1 && flat; ++k) flat = u.u_col[k - 2] == w_.lambda2;
            if (!flat) continue;
            Rational above = j + 2 <= n_ ? u.u_row[j + 1] : w_.lambda1;
            Rational below = j + 2 <= n_ ? u.u_col[j] : w_.lambda3;
            if (above > w_.lambda2 && below < w_.lambda2) return j;
        }
        return std::nullopt;
    }

    FiberType fiber_type(const GZPoint& u) const {
        FiberType ft;
        ft.torus_rank = active_face(u).dimension;
        auto j = condition_j(u);
        ft.sphere_dim = j ? 2 * *j + 1 : 0;
        ft.is_lagrangian = ft.sphere_dim + ft.torus_rank == 2 * n_ - 1;
        return ft;
    }

    // Partition plus rank-based dimension for a tight-index set. Purely
    // formal: does not certify the pattern is realized by a point.
    FaceDescriptor face_from_active(const std::vector<int>& active) const {
        std::vector<std::pair<int, int>> tight;
        for (int i : active) tight.push_back(pairs_.at(i));
        FaceDescriptor f;
        f.n = n_;
        f.classes = equality_classes(n_, tight);
        f.dimension = face_dimension(active);
        return f;
    }

    int face_dimension(const std::vector<int>& active) const {
        std::vector<std::vector<Rational>> rows;
        for (int i : active) rows.push_back(difference_row(pairs_.at(i)));
        return 2 * n_ - 1 - matrix_rank(rows);
    }

    // Tight indices of a face given as a node partition.
    std::vector<int> active_from_face(const FaceDescriptor& f) const {
        std::vector<int> cls(face_node_count(n_), -1);
        for (std::size_t c = 0; c < f.classes.size(); ++c)
            for (int v : f.classes[c]) cls[v] = static_cast<int>(c);
        std::vector<int> active;
        for (int i = 0; i < num_inequalities(); ++i) {
            auto [a, b] = pairs_[i];
            if (cls[a] >= 0 && cls[a] == cls[b]) active.push_back(i);
        }
        return active;
    }

    // A point with exactly the requested equalities, or none when the
    // pattern is not realized as a face. Tight pairs are contracted to one
    // coordinate per equality class before the feasibility search, so the
    // elimination only ever sees the face's free directions.
    std::optional<GZPoint> relint_point(const std::vector<int>& active) const {
        std::vector<bool> tight(num_inequalities(), false);
        for (int i : active) tight.at(i) = true;

        const int nodes = face_node_count(n_);
        std::vector<int> parent(nodes);
        for (int v = 0; v < nodes; ++v) parent[v] = v;
        auto find = [&parent](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (int i = 0; i < num_inequalities(); ++i)
            if (tight[i]) parent[find(pairs_[i].first)] = find(pairs_[i].second);

        // Classes holding a weight node are pinned to its value; two
        // different weights in one class kill the pattern outright.
        std::map<int, Rational> pinned;
        for (int id : {0, n_ + 1, 2 * n_ + 1}) {
            int r = find(id);
            Rational val = constant_of(id);
            if (auto it = pinned.find(r); it != pinned.end()) {
                if (it->second != val) return std::nullopt;
            } else {
                pinned.emplace(r, val);
            }
        }
        std::map<int, int> var_of;
        for (int v = 0; v < nodes; ++v) {
            int r = find(v);
            if (!pinned.count(r)) var_of.emplace(r, 0);
        }
        int nv = 0;
        for (auto& [root, idx] : var_of) idx = nv++;

        std::vector<LinConstraint> cs;
        for (int i = 0; i < num_inequalities(); ++i) {
            if (tight[i]) continue;
            int ra = find(pairs_[i].first), rb = find(pairs_[i].second);
            if (ra == rb) return std::nullopt;
            LinConstraint c;
            c.a.assign(nv, Rational(0));
            c.strict = true;
            if (auto it = pinned.find(ra); it != pinned.end()) c.b += it->second;
            else c.a[var_of.at(ra)] += 1;
            if (auto it = pinned.find(rb); it != pinned.end()) c.b -= it->second;
            else c.a[var_of.at(rb)] -= 1;
            bool constant = true;
            for (const auto& x : c.a) constant = constant && x == 0;
            if (constant) {
                if (!(c.b > 0)) return std::nullopt;
                continue;
            }
            cs.push_back(std::move(c));
        }
        auto x = fm_witness(cs, nv);
        if (!x) return std::nullopt;

        auto value_of = [&](int id) {
            int r = find(id);
            auto it = pinned.find(r);
            return it != pinned.end() ? it->second : (*x)[var_of.at(r)];
        };
        GZPoint u;
        for (int k = 0; k < n_; ++k) u.u_row.push_back(value_of(n_ - k));
        for (int k = 0; k < n_ - 1; ++k) u.u_col.push_back(value_of(n_ + 2 + k));
        return u;
    }

private:
    int n_;
    Weight w_;
    std::vector<std::pair<int, int>> pairs_;

    void check_shape(const GZPoint& u) const {
        if (static_cast<int>(u.u_row.size()) != n_ ||
            static_cast<int>(u.u_col.size()) != n_ - 1)
            throw std::invalid_argument("GZPoint: expected " + std::to_string(n_) + "+" +
                                        std::to_string(n_ - 1) + " coordinates");
    }

    void require_member(const GZPoint& u) const {
        if (!contains(u)) throw std::domain_error("point lies outside the polytope");
    }

    // Coefficient vector of node id over the flat coordinates
    // (u_{1,1..n}, u_{2..n,1}); weights contribute nothing here.
    std::vector<Rational> coeff_of(int id) const {
        std::vector<Rational> a(2 * n_ - 1, Rational(0));
        if (id >= 1 && id <= n_) a[n_ - id] = 1;
        else if (id >= n_ + 2 && id <= 2 * n_) a[id - 2] = 1;
        return a;
    }

    Rational constant_of(int id) const {
        if (id == 0) return w_.lambda1;
        if (id == n_ + 1) return w_.lambda2;
        if (id == 2 * n_ + 1) return w_.lambda3;
        return Rational(0);
    }

    std::vector<Rational> difference_row(std::pair<int, int> pr) const {
        auto a = coeff_of(pr.first);
        auto b = coeff_of(pr.second);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return a;
    }
};

// The point with flat segment u_{1,1..j+1} = u_{2..j+1,1} = 0 and the
// antisymmetric ramp (n-1)(k-1) outside it; j=0 is the barycenter.
inline GZPoint monotone_point(int n, int j) {
    if (n < 2) throw std::invalid_argument("monotone_point: need n >= 2");
    if (j < 0 || j > n - 1) throw std::invalid_argument("monotone_point: need 0 <= j <= n-1");
    GZPoint u;
    for (int k = 1; k <= n; ++k)
        u.u_row.push_back(k <= j + 1 ? Rational(0) : Rational(n - 1) * (k - 1));
    for (int k = 2; k <= n; ++k) u.u_col.push_back(-u.u_row[k - 1]);
    return u;
}

inline GZPoint u0_point(int n) { return monotone_point(n, 0); }

// The non-monotone anchor: u_{1,1} = u_{1,2} = u_{2,1} = 0 with ramp n(k-2).
inline GZPoint u1_point(int n) {
    if (n < 3) throw std::invalid_argument("u1_point: need n >= 3");
    GZPoint u;
    for (int k = 1; k <= n; ++k)
        u.u_row.push_back(k <= 2 ? Rational(0) : Rational(n) * (k - 2));
    for (int k = 2; k <= n; ++k) u.u_col.push_back(-u.u_row[k - 1]);
    return u;
}

// (1-t) u_0 + t u_1 componentwise.
inline GZPoint segment_point(int n, const Rational& t) {
    if (t < 0 || t > 1) throw std::invalid_argument("segment_point: need 0 <= t <= 1");
    GZPoint a = u0_point(n), b = u1_point(n), u;
    Rational s = Rational(1) - t;
    for (std::size_t i = 0; i < a.u_row.size(); ++i) u.u_row.push_back(s * a.u_row[i] + t * b.u_row[i]);
    for (std::size_t i = 0; i < a.u_col.size(); ++i) u.u_col.push_back(s * a.u_col[i] + t * b.u_col[i]);
    return u;
}

namespace detail {

inline void check_plucker_shape(const PluckerVector& v) {
    if (v.p.size() != v.p_under.size() || v.p.size() < 2)
        throw std::invalid_argument("PluckerVector: need matching lists of length n+1 >= 3");
}

} // namespace detail

// Alternating pairing sum_i (-1)^{i+1} p_i p_{ibar}; zero exactly on the
// incidence variety.
inline ComplexRational plucker_residual(const PluckerVector& v) {
    detail::check_plucker_shape(v);
    ComplexRational acc(Rational(0));
    for (std::size_t i = 0; i < v.p.size(); ++i) {
        ComplexRational term = v.p[i] * v.p_under[i];
        acc = i % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

// Family member p_1 p_{1bar} - p_2 p_{2bar} + s * (tail); s=1 recovers the
// Plucker relation, s=0 the central binomial.
inline ComplexRational degeneration_residual(const PluckerVector& v, const Rational& s) {
    detail::check_plucker_shape(v);
    ComplexRational head = v.p[0] * v.p_under[0] - v.p[1] * v.p_under[1];
    ComplexRational tail(Rational(0));
    for (std::size_t i = 2; i < v.p.size(); ++i) {
        ComplexRational term = v.p[i] * v.p_under[i];
        tail = i % 2 == 0 ? tail + term : tail - term;
    }
    return head + ComplexRational(s) * tail;
}

// Exact torus-action moment map: squared moduli only, so everything stays
// rational. Lands in the polytope whenever the input satisfies the central
// fiber equation.
inline GZPoint moment_map_eval(const PluckerVector& v, const Weight& w) {
    detail::check_plucker_shape(v);
    const int n = static_cast<int>(v.p.size()) - 1;
    Rational P(0), Q(0);
    for (const auto& z : v.p) P += z.norm2();
    for (const auto& z : v.p_under) Q += z.norm2();
    if (P == 0 || Q == 0) throw std::domain_error("moment_map_eval: a factor has zero norm");
    GZPoint u;
    u.u_row.push_back(w.lambda2 + (w.lambda1 - w.lambda2) * v.p[0].norm2() / P +
                      (w.lambda3 - w.lambda2) * v.p_under[0].norm2() / Q);
    Rational prefix = v.p[0].norm2();
    for (int j = 2; j <= n; ++j) {
        prefix += v.p[j - 1].norm2();
        u.u_row.push_back(w.lambda2 + (w.lambda1 - w.lambda2) * prefix / P);
    }
    prefix = v.p_under[0].norm2();
    for (int j = 2; j <= n; ++j) {
        prefix += v.p_under[j - 1].norm2();
        u.u_col.push_back(w.lambda2 + (w.lambda3 - w.lambda2) * prefix / Q);
    }
    return u;
}

} // namespace gzfloer
