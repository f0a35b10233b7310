#pragma once

#include "gzfloer/complex_rational.hpp"
#include "gzfloer/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gzfloer {

struct NovikovTerm {
    Rational exp;
    ComplexRational coeff;
    friend bool operator==(const NovikovTerm& a, const NovikovTerm& b) {
        return a.exp == b.exp && a.coeff == b.coeff;
    }
};

// Truncated element of the Novikov field: a finite sum of a_i T^{mu_i} with
// exact complex-rational coefficients, rational exponents strictly increasing,
// all below truncation_order. The zero element stores no terms. All binary
// operations require matching truncation orders.
class NovikovElement {
public:
    explicit NovikovElement(Rational truncation_order)
        : trunc_(std::move(truncation_order)) {
        check_trunc();
    }

    NovikovElement(std::vector<NovikovTerm> terms, Rational truncation_order)
        : trunc_(std::move(truncation_order)) {
        check_trunc();
        std::sort(terms.begin(), terms.end(),
                  [](const NovikovTerm& a, const NovikovTerm& b) { return a.exp < b.exp; });
        for (auto& t : terms) {
            if (t.exp >= trunc_) break;
            if (!terms_.empty() && terms_.back().exp == t.exp) {
                terms_.back().coeff += t.coeff;
                if (terms_.back().coeff.is_zero()) terms_.pop_back();
            } else if (!t.coeff.is_zero()) {
                terms_.push_back(std::move(t));
            }
        }
    }

    static NovikovElement zero(Rational trunc) { return NovikovElement(std::move(trunc)); }
    static NovikovElement constant(ComplexRational c, Rational trunc) {
        return NovikovElement({{Rational(0), std::move(c)}}, std::move(trunc));
    }
    static NovikovElement one(Rational trunc) {
        return constant(ComplexRational(1), std::move(trunc));
    }
    static NovikovElement monomial(ComplexRational c, Rational exp, Rational trunc) {
        return NovikovElement({{std::move(exp), std::move(c)}}, std::move(trunc));
    }

    const std::vector<NovikovTerm>& terms() const { return terms_; }
    const Rational& truncation() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }

    // Smallest stored exponent; nullopt is the +infinity sentinel of the zero
    // element.
    std::optional<Rational> valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.front().exp;
    }

    bool is_unit() const { return !terms_.empty() && terms_.front().exp == 0; }

    ComplexRational leading_coeff() const {
        return terms_.empty() ? ComplexRational(0) : terms_.front().coeff;
    }

    ComplexRational coeff_at(const Rational& e) const {
        for (const auto& t : terms_) {
            if (t.exp == e) return t.coeff;
            if (t.exp > e) break;
        }
        return ComplexRational(0);
    }

    NovikovElement operator-() const {
        NovikovElement r(*this);
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend NovikovElement operator+(const NovikovElement& a, const NovikovElement& b) {
        a.require_same_trunc(b);
        NovikovElement r(a.trunc_);
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                ComplexRational c = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend NovikovElement operator-(const NovikovElement& a, const NovikovElement& b) {
        return a + (-b);
    }

    friend NovikovElement operator*(const NovikovElement& a, const NovikovElement& b) {
        a.require_same_trunc(b);
        std::vector<NovikovTerm> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                Rational e = ta.exp + tb.exp;
                if (e >= a.trunc_) continue;
                prod.push_back({std::move(e), ta.coeff * tb.coeff});
            }
        }
        return NovikovElement(std::move(prod), a.trunc_);
    }

    NovikovElement& operator+=(const NovikovElement& o) { return *this = *this + o; }
    NovikovElement& operator-=(const NovikovElement& o) { return *this = *this - o; }
    NovikovElement& operator*=(const NovikovElement& o) { return *this = *this * o; }

    NovikovElement scale(const ComplexRational& f) const {
        if (f.is_zero()) return zero(trunc_);
        NovikovElement r(*this);
        for (auto& t : r.terms_) t.coeff *= f;
        return r;
    }

    // Multiplication by T^delta. The truncation order moves with the terms,
    // keeping the set of known orders honest in both directions.
    NovikovElement shift(const Rational& delta) const {
        NovikovElement r(trunc_ + delta);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.exp += delta;
        return r;
    }

    // Lowers the truncation order, dropping now-unknown terms. Raising it is
    // rejected: the dropped information cannot be recovered.
    NovikovElement truncate_to(const Rational& new_trunc) const {
        if (new_trunc > trunc_)
            throw std::invalid_argument("truncate_to: cannot raise truncation order");
        NovikovElement r(new_trunc);
        for (const auto& t : terms_) {
            if (t.exp >= new_trunc) break;
            r.terms_.push_back(t);
        }
        return r;
    }

    // Geometric-series inverse of a valuation-0 element: with x = c0(1 + z),
    // v(z) > 0, the inverse is c0^{-1} (1 - z + z^2 - ...) which terminates
    // under truncation.
    NovikovElement invert_unit() const {
        if (!is_unit())
            throw std::domain_error("invert_unit: element has nonzero valuation");
        ComplexRational c0inv = terms_.front().coeff.inverse();
        NovikovElement z = scale(c0inv);
        z.terms_.erase(z.terms_.begin()); // z now has valuation > 0
        NovikovElement acc = one(trunc_);
        NovikovElement term = one(trunc_);
        while (true) {
            term = -(term * z);
            if (term.is_zero()) break;
            acc += term;
        }
        return acc.scale(c0inv);
    }

    NovikovElement power(long k) const {
        if (k < 0) {
            if (!is_unit())
                throw std::domain_error("power: negative power of a non-unit");
            return invert_unit().power(-k);
        }
        NovikovElement r = one(trunc_);
        NovikovElement base(*this);
        for (long i = 0; i < k; ++i) r *= base;
        return r;
    }

    friend bool operator==(const NovikovElement& a, const NovikovElement& b) {
        return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

private:
    void check_trunc() const {
        if (trunc_ <= 0) throw std::invalid_argument("truncation order must be positive");
    }
    void require_same_trunc(const NovikovElement& o) const {
        if (trunc_ != o.trunc_)
            throw std::invalid_argument("mismatched truncation orders: " + frac_string(trunc_) +
                                        " vs " + frac_string(o.trunc_));
    }

    std::vector<NovikovTerm> terms_;
    Rational trunc_;
};

inline std::string valuation_string(const NovikovElement& x) {
    auto v = x.valuation();
    return v ? frac_string(*v) : "inf";
}

inline std::string to_string(const NovikovElement& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < x.terms().size(); ++i) {
        const auto& t = x.terms()[i];
        if (i) s += " + ";
        s += "(" + to_string(t.coeff) + ")";
        if (t.exp != 0) s += "*T^(" + frac_string(t.exp) + ")";
    }
    return s;
}

} // namespace gzfloer
