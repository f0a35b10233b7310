#pragma once

#include "gzfloer/rational.hpp"

#include <stdexcept>
#include <string>

namespace gzfloer {

// Element of Q(i), stored as exact real and imaginary parts.
struct ComplexRational {
    Rational re{0};
    Rational im{0};

    ComplexRational() = default;
    ComplexRational(Rational r) : re(std::move(r)) {}
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ComplexRational(int r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }

    ComplexRational conj() const { return {re, -im}; }

    // |z|^2, exact.
    Rational norm2() const { return re * re + im * im; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    ComplexRational operator-() const { return {-re, -im}; }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    ComplexRational inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(i)");
        Rational n = norm2();
        return {re / n, -im / n};
    }
    friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
        return a * b.inverse();
    }
    ComplexRational& operator+=(const ComplexRational& o) { return *this = *this + o; }
    ComplexRational& operator-=(const ComplexRational& o) { return *this = *this - o; }
    ComplexRational& operator*=(const ComplexRational& o) { return *this = *this * o; }

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }
};

inline std::string to_string(const ComplexRational& z) {
    if (z.im == 0) return frac_string(z.re);
    std::string s;
    if (z.re != 0) {
        s = frac_string(z.re);
        if (z.im > 0) s += "+";
    }
    s += frac_string(z.im) + "i";
    return s;
}

} // namespace gzfloer
