#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "linrel/rational.hpp"

namespace linrel {

// Exact element re + im*i of the Gaussian rationals Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(std::int64_t re) : re_(re) {}         // NOLINT(google-explicit-constructor)
    GaussianRational(int re) : re_(std::int64_t{re}) {}    // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }

    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }
    [[nodiscard]] bool is_one() const { return im_.is_zero() && re_ == Rational(1); }

    [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }

    // |z|^2 as an exact rational.
    [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }

    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_, Rational()};
        if (a.im_.is_zero()) return {a.re_ * b.re_, a.re_ * b.im_};
        if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero in Q(i)");
        if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
        Rational n = b.norm();
        GaussianRational num = a * b.conj();
        return {num.re_ / n, num.im_ / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    [[nodiscard]] std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string s = re_.is_zero() ? "" : re_.str();
        if (im_.sign() < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        Rational mag = im_.sign() < 0 ? -im_ : im_;
        if (!(mag == Rational(1))) s += mag.str() + "*";
        return s + "i";
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

private:
    Rational re_;
    Rational im_;
};

using Scalar = GaussianRational;

}  // namespace linrel
