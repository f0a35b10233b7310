#pragma once

#include "gzfloer/complex_rational.hpp"
#include "gzfloer/novikov.hpp"
#include "gzfloer/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace gzfloer {

// Torus coordinate y_{1,j} (family 0, j in [1,n]) or y_{j,1} (family 1,
// j in [2,n]); the corner variable y_{1,1} belongs to the row family.
struct VarId {
    int family = 0;
    int j = 1;

    auto operator<=>(const VarId&) const = default;

    static VarId row(int j) { return {0, j}; }
    static VarId col(int j) { return {1, j}; }

    std::string name() const {
        return family == 0 ? "y_{1," + std::to_string(j) + "}"
                           : "y_{" + std::to_string(j) + ",1}";
    }
};

inline VarId var_from_name(const std::string& s) {
    auto comma = s.find(',');
    if (s.size() < 7 || s.substr(0, 3) != "y_{" || s.back() != '}' || comma == std::string::npos)
        throw std::invalid_argument("var_from_name: expected y_{i,j}, got '" + s + "'");
    std::string first = s.substr(3, comma - 3);
    std::string second = s.substr(comma + 1, s.size() - comma - 2);
    try {
        if (first == "1") return VarId::row(std::stoi(second));
        if (second == "1") return VarId::col(std::stoi(first));
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("var_from_name: no such coordinate '" + s + "'");
}

// Canonical variable order: y_{1,1..n} then y_{2..n,1}.
inline std::vector<VarId> all_vars(int n) {
    std::vector<VarId> out;
    for (int j = 1; j <= n; ++j) out.push_back(VarId::row(j));
    for (int j = 2; j <= n; ++j) out.push_back(VarId::col(j));
    return out;
}

inline void check_var(int n, VarId v) {
    bool ok = v.family == 0 ? v.j >= 1 && v.j <= n : v.j >= 2 && v.j <= n;
    if (!ok) throw std::invalid_argument("variable " + v.name() + " is out of range for n=" +
                                         std::to_string(n));
}

struct LaurentMonomial {
    std::map<VarId, int> exponents; // sparse, no zero entries
    NovikovElement coeff;
};

struct LaurentPotential {
    int n = 0;
    Rational t{0}; // 0 marks a split system carrying no T-weight
    Rational trunc{1};
    std::vector<LaurentMonomial> monomials;
};

// Bulk deformation data: two Novikov units entering the potential, plus the
// two auxiliary complex weights a, a_under closing the split systems.
struct BulkParams {
    NovikovElement c;
    NovikovElement c_under;
    ComplexRational a{Rational(1)};
    ComplexRational a_under{Rational(-1)};

    static BulkParams trivial(const Rational& trunc) {
        return {NovikovElement::one(trunc), NovikovElement::one(trunc)};
    }
};

namespace detail {

inline LaurentMonomial mono(std::map<VarId, int> exps, NovikovElement coeff) {
    LaurentMonomial m{std::move(exps), std::move(coeff)};
    for (auto it = m.exponents.begin(); it != m.exponents.end();)
        it = it->second == 0 ? m.exponents.erase(it) : std::next(it);
    return m;
}

// Places a valuation-zero unit at T-exponent `shift` inside truncation level
// `trunc`; refuses units too coarse to fill the available precision.
inline NovikovElement weighted_unit(const NovikovElement& u, const Rational& shift,
                                    const Rational& trunc, const char* what) {
    if (!u.is_unit())
        throw std::invalid_argument(std::string(what) + " must be a unit (valuation 0)");
    Rational target = trunc - shift;
    if (u.truncation() < target)
        throw std::invalid_argument(std::string(what) + " is truncated below " +
                                    frac_string(target));
    return u.truncate_to(target).shift(shift);
}

} // namespace detail

// The two-level potential: the four corner terms at T^{(n-1)(1-t)} and the
// 2n-2 ladder terms at T^{n-1+t}, bulk units riding on c/y_{1,n} and
// c_under*y_{n,1}.
inline LaurentPotential build_potential(int n, const Rational& t, const BulkParams& bulk,
                                        const Rational& trunc) {
    if (n < 3) throw std::invalid_argument("build_potential: need n >= 3");
    if (!(t > 0 && t <= 1)) throw std::invalid_argument("build_potential: need 0 < t <= 1");
    Rational L = Rational(n - 1) * (Rational(1) - t);
    Rational H = Rational(n - 1) + t;
    if (trunc <= H)
        throw std::invalid_argument("build_potential: truncation must exceed " + frac_string(H));

    using detail::mono;
    auto at = [&](const Rational& e) {
        return NovikovElement::monomial(ComplexRational(Rational(1)), e, trunc);
    };
    LaurentPotential W;
    W.n = n;
    W.t = t;
    W.trunc = trunc;
    W.monomials.push_back(mono({{VarId::row(2), 1}, {VarId::row(1), -1}}, at(L)));
    W.monomials.push_back(mono({{VarId::row(2), 1}}, at(L)));
    W.monomials.push_back(mono({{VarId::row(1), 1}, {VarId::col(2), -1}}, at(L)));
    W.monomials.push_back(mono({{VarId::col(2), -1}}, at(L)));
    W.monomials.push_back(mono({{VarId::row(n), -1}},
                               detail::weighted_unit(bulk.c, H, trunc, "bulk parameter c")));
    for (int j = n; j >= 3; --j)
        W.monomials.push_back(mono({{VarId::row(j), 1}, {VarId::row(j - 1), -1}}, at(H)));
    W.monomials.push_back(mono({{VarId::col(n), 1}},
                               detail::weighted_unit(bulk.c_under, H, trunc, "bulk parameter c_under")));
    for (int j = n; j >= 3; --j)
        W.monomials.push_back(mono({{VarId::col(j - 1), 1}, {VarId::col(j), -1}}, at(H)));
    return W;
}

// y d/dy: scale each monomial by its integer exponent, dropping the rest.
inline LaurentPotential log_derivative(const LaurentPotential& W, VarId v) {
    check_var(W.n, v);
    LaurentPotential D;
    D.n = W.n;
    D.t = W.t;
    D.trunc = W.trunc;
    for (const auto& m : W.monomials) {
        auto it = m.exponents.find(v);
        if (it == m.exponents.end()) continue;
        LaurentMonomial dm = m;
        dm.coeff = m.coeff.scale(ComplexRational(Rational(it->second)));
        D.monomials.push_back(std::move(dm));
    }
    return D;
}

// Substitution over the Novikov field; negative exponents invert units and
// throw std::domain_error on anything else.
inline NovikovElement evaluate(const LaurentPotential& P,
                               const std::map<VarId, NovikovElement>& values) {
    NovikovElement total = NovikovElement::zero(P.trunc);
    for (const auto& m : P.monomials) {
        NovikovElement acc = m.coeff;
        for (const auto& [v, e] : m.exponents) {
            auto it = values.find(v);
            if (it == values.end())
                throw std::invalid_argument("evaluate: no value for " + v.name());
            acc = acc * it->second.power(e);
        }
        total += acc;
    }
    return total;
}

// Substitution over the complex numbers; every coefficient must be a plain
// constant (the split systems are).
inline ComplexRational evaluate_complex(const LaurentPotential& P,
                                        const std::map<VarId, ComplexRational>& values) {
    ComplexRational total{Rational(0)};
    for (const auto& m : P.monomials) {
        const auto& terms = m.coeff.terms();
        if (terms.empty()) continue;
        if (terms.size() != 1 || terms[0].exp != 0)
            throw std::invalid_argument("evaluate_complex: coefficient is not a constant");
        ComplexRational acc = terms[0].coeff;
        for (const auto& [v, e] : m.exponents) {
            auto it = values.find(v);
            if (it == values.end())
                throw std::invalid_argument("evaluate_complex: no value for " + v.name());
            ComplexRational p = e >= 0 ? it->second : it->second.inverse();
            for (int k = 0; k < (e >= 0 ? e : -e); ++k) acc = acc * p;
        }
        total = total + acc;
    }
    return total;
}

// The three weightless systems whose union (minus the auxiliary a-terms)
// recovers the potential's support: corner, row ladder closed by a*y_{1,2},
// column ladder closed by a_under/y_{2,1}.
inline std::tuple<LaurentPotential, LaurentPotential, LaurentPotential>
split_decompose(int n, const BulkParams& bulk) {
    if (n < 3) throw std::invalid_argument("split_decompose: need n >= 3");
    if (!bulk.c.is_unit() || !bulk.c_under.is_unit())
        throw std::invalid_argument("split_decompose: bulk parameters must be units");
    if (bulk.c.truncation() != bulk.c_under.truncation())
        throw std::invalid_argument("split_decompose: c and c_under disagree on truncation");
    if (bulk.a.is_zero() || bulk.a_under.is_zero())
        throw std::invalid_argument("split_decompose: a and a_under must be nonzero");
    Rational tr = bulk.c.truncation();

    using detail::mono;
    auto one = [&] { return NovikovElement::one(tr); };
    LaurentPotential corner, row, col;
    for (auto* p : {&corner, &row, &col}) {
        p->n = n;
        p->t = Rational(0);
        p->trunc = tr;
    }
    corner.monomials.push_back(mono({{VarId::row(2), 1}, {VarId::row(1), -1}}, one()));
    corner.monomials.push_back(mono({{VarId::row(2), 1}}, one()));
    corner.monomials.push_back(mono({{VarId::row(1), 1}, {VarId::col(2), -1}}, one()));
    corner.monomials.push_back(mono({{VarId::col(2), -1}}, one()));

    row.monomials.push_back(mono({{VarId::row(n), -1}}, bulk.c));
    for (int j = n; j >= 3; --j)
        row.monomials.push_back(mono({{VarId::row(j), 1}, {VarId::row(j - 1), -1}}, one()));
    row.monomials.push_back(mono({{VarId::row(2), 1}}, NovikovElement::constant(bulk.a, tr)));

    col.monomials.push_back(mono({{VarId::col(n), 1}}, bulk.c_under));
    for (int j = n; j >= 3; --j)
        col.monomials.push_back(mono({{VarId::col(j - 1), 1}, {VarId::col(j), -1}}, one()));
    col.monomials.push_back(mono({{VarId::col(2), -1}},
                                 NovikovElement::constant(bulk.a_under, tr)));
    return {std::move(corner), std::move(row), std::move(col)};
}

struct SplitSolution {
    std::map<VarId, ComplexRational> assignment;
    ComplexRational c, c_under, a, a_under;
};

// The one exhibited branch: seed the corner block at -1, y_{1,3}=1,
// y_{3,1}=-1, run both second-order recurrences, close with c, c_under, and
// verify every split equation vanishes exactly over C.
inline SplitSolution solve_split_leading(int n) {
    if (n < 3) throw std::invalid_argument("solve_split_leading: need n >= 3");
    SplitSolution s;
    s.a = ComplexRational(Rational(1));
    s.a_under = ComplexRational(Rational(-1));
    auto& y = s.assignment;
    const ComplexRational minus_one{Rational(-1)};
    y[VarId::row(1)] = minus_one;
    y[VarId::row(2)] = minus_one;
    y[VarId::col(2)] = minus_one;
    y[VarId::row(3)] = ComplexRational(Rational(1));
    y[VarId::col(3)] = minus_one;
    for (int j = 3; j <= n - 1; ++j) {
        y[VarId::row(j + 1)] =
            y[VarId::row(j)] * y[VarId::row(j)] / y[VarId::row(j - 1)];
        y[VarId::col(j + 1)] =
            y[VarId::col(j)] * y[VarId::col(j)] / y[VarId::col(j - 1)];
    }
    s.c = y[VarId::row(n)] * y[VarId::row(n)] / y[VarId::row(n - 1)];
    s.c_under = y[VarId::col(n - 1)] / (y[VarId::col(n)] * y[VarId::col(n)]);

    BulkParams bp{NovikovElement::constant(s.c, Rational(1)),
                  NovikovElement::constant(s.c_under, Rational(1)), s.a, s.a_under};
    auto [corner, row, col] = split_decompose(n, bp);
    auto check_zero = [&](const LaurentPotential& P, VarId v) {
        if (!evaluate_complex(log_derivative(P, v), y).is_zero())
            throw std::logic_error("solve_split_leading: residual at " + v.name());
    };
    for (auto v : {VarId::row(1), VarId::row(2), VarId::col(2)}) check_zero(corner, v);
    for (int j = 2; j <= n; ++j) check_zero(row, VarId::row(j));
    for (int j = 2; j <= n; ++j) check_zero(col, VarId::col(j));
    return s;
}

// A solved critical point over the Novikov field, carried together with the
// data needed to re-verify it from scratch.
struct CriticalCertificate {
    int n;
    Rational t;
    Rational threshold;
    std::map<VarId, NovikovElement> assignment;
    BulkParams bulk;
    std::map<VarId, std::optional<Rational>> residual_valuations;
    bool valid;
};

// Extends the split leading terms to a Novikov critical point of the full
// potential: seed y_{1,1}=y_{1,2}=y_{2,1} = -1 - T^{nt}, solve the two corner
// couplings in closed form (the T^{nt} gap cancels against the level
// difference), run the recurrences, choose c and c_under to kill the last
// two equations, then re-substitute into all 2n-1 equations and record the
// residual valuations.
inline CriticalCertificate extend_to_critical_point(int n, const Rational& t,
                                                    const Rational& trunc) {
    if (n < 3) throw std::invalid_argument("extend_to_critical_point: need n >= 3");
    if (!(t > 0 && t <= 1))
        throw std::invalid_argument("extend_to_critical_point: need 0 < t <= 1");
    Rational L = Rational(n - 1) * (Rational(1) - t);
    Rational H = Rational(n - 1) + t;
    Rational nt = Rational(n) * t;
    if (L + nt != H) throw std::logic_error("level identity failed");
    if (trunc <= H)
        throw std::invalid_argument("extend_to_critical_point: truncation must exceed " +
                                    frac_string(H));

    // two levels of headroom: one consumed by each T^{-nt} rescaling below
    Rational work = trunc + nt + nt;
    Rational tr2 = trunc + nt;
    auto require_unit = [](const NovikovElement& x, const std::string& what) {
        if (!x.is_unit())
            throw std::domain_error("extend_to_critical_point: " + what +
                                    " is not a unit; branch breaks down");
        return x;
    };

    std::map<VarId, NovikovElement> y;
    NovikovElement seed({{Rational(0), ComplexRational(Rational(-1))},
                         {nt, ComplexRational(Rational(-1))}},
                        work);
    y.emplace(VarId::row(1), seed);
    y.emplace(VarId::row(2), seed);
    y.emplace(VarId::col(2), seed);

    // d(1,2): y_{1,3}/y_{1,2} * T^H = (y_{1,2}/y_{1,1} + y_{1,2}) * T^L
    NovikovElement gap_row = y.at(VarId::row(2)) * y.at(VarId::row(1)).invert_unit() +
                             y.at(VarId::row(2));
    auto v_row = gap_row.valuation();
    if (!v_row || *v_row < nt)
        throw std::domain_error("extend_to_critical_point: row coupling valuation below n*t");
    NovikovElement y13 = y.at(VarId::row(2)).truncate_to(tr2) *
                         require_unit(gap_row.shift(-nt), "rescaled row coupling");

    // d(2,1): y_{2,1}/y_{3,1} * T^H = ((y_{1,1} + 1)/y_{2,1}) * T^L
    NovikovElement gap_col = y.at(VarId::row(1)) + NovikovElement::one(work);
    auto v_col = gap_col.valuation();
    if (!v_col || *v_col < nt)
        throw std::domain_error("extend_to_critical_point: column coupling valuation below n*t");
    NovikovElement y21t = y.at(VarId::col(2)).truncate_to(tr2);
    NovikovElement y31 =
        y21t * y21t * require_unit(gap_col.shift(-nt), "rescaled column coupling").invert_unit();

    for (auto v : {VarId::row(1), VarId::row(2), VarId::col(2)})
        y.at(v) = y.at(v).truncate_to(tr2);
    y.emplace(VarId::row(3), require_unit(y13, "y_{1,3}"));
    y.emplace(VarId::col(3), require_unit(y31, "y_{3,1}"));

    for (int j = 3; j <= n - 1; ++j) {
        auto next_row = y.at(VarId::row(j)) * y.at(VarId::row(j)) *
                        y.at(VarId::row(j - 1)).invert_unit();
        y.emplace(VarId::row(j + 1), require_unit(next_row, VarId::row(j + 1).name()));
        auto next_col = y.at(VarId::col(j)) * y.at(VarId::col(j)) *
                        y.at(VarId::col(j - 1)).invert_unit();
        y.emplace(VarId::col(j + 1), require_unit(next_col, VarId::col(j + 1).name()));
    }

    NovikovElement c = require_unit(
        y.at(VarId::row(n)) * y.at(VarId::row(n)) * y.at(VarId::row(n - 1)).invert_unit(), "c");
    NovikovElement c_under = require_unit(
        y.at(VarId::col(n - 1)) * (y.at(VarId::col(n)) * y.at(VarId::col(n))).invert_unit(),
        "c_under");

    for (auto& [v, x] : y) x = x.truncate_to(trunc);
    BulkParams bulk{c.truncate_to(trunc), c_under.truncate_to(trunc)};

    auto W = build_potential(n, t, bulk, trunc);
    std::map<VarId, std::optional<Rational>> residuals;
    for (auto v : all_vars(n)) residuals[v] = evaluate(log_derivative(W, v), y).valuation();

    auto split = solve_split_leading(n);
    bool ok = true;
    for (auto v : all_vars(n)) {
        const auto& x = y.at(v);
        ok = ok && x.is_unit() && x.leading_coeff() == split.assignment.at(v);
        const auto& rv = residuals.at(v);
        ok = ok && (!rv.has_value() || *rv >= trunc);
    }
    ok = ok && bulk.c.is_unit() && bulk.c.leading_coeff() == split.c;
    ok = ok && bulk.c_under.is_unit() && bulk.c_under.leading_coeff() == split.c_under;

    return CriticalCertificate{n, t, trunc, std::move(y), std::move(bulk),
                               std::move(residuals), ok};
}

struct CertifyResult {
    bool valid = false;
    std::map<VarId, std::optional<Rational>> residuals;
    std::vector<std::string> failures;
};

// Re-derives every residual from the potential and the assignment alone;
// nothing stored in the certificate is trusted except the threshold.
inline CertifyResult certify(const LaurentPotential& W, const CriticalCertificate& cert) {
    for (auto v : all_vars(W.n))
        if (!cert.assignment.count(v))
            throw std::invalid_argument("certify: assignment misses " + v.name());

    CertifyResult r;
    r.valid = true;
    for (auto v : all_vars(W.n)) {
        const auto& x = cert.assignment.at(v);
        if (!x.is_unit()) {
            r.failures.push_back(v.name() + ": value is not a unit");
            r.valid = false;
        }
    }
    for (auto v : all_vars(W.n)) {
        try {
            auto rv = evaluate(log_derivative(W, v), cert.assignment).valuation();
            r.residuals[v] = rv;
            if (rv.has_value() && *rv < cert.threshold) {
                r.failures.push_back(v.name() + ": residual valuation " + frac_string(*rv) +
                                     " below threshold " + frac_string(cert.threshold));
                r.valid = false;
            }
        } catch (const std::domain_error& e) {
            r.failures.push_back(v.name() + ": residual not computable: " + e.what());
            r.valid = false;
        }
    }
    return r;
}

} // namespace gzfloer
