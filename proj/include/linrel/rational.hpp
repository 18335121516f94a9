#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <string_view>

#include "linrel/error.hpp"

namespace linrel {

/*
 * Exact rational number in canonical reduced form.
 *
 * Values whose numerator and denominator fit in int64 are kept inline and
 * combined with 128-bit intermediates; anything larger is promoted to a
 * shared, immutable GMP rational. The representation is canonical: a value
 * is stored inline iff it fits, so structural equality is value equality.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {  // NOLINT(google-explicit-constructor)
        if (n == kMin) promote_from(n, 1);
    }
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    explicit Rational(const mpq_class& q) {
        mpq_class c(q);
        c.canonicalize();
        assign(c);
    }

    static Rational parse(std::string_view text) {
        // "p" or "p/q" with an optional leading '-' on p and q > 0.
        auto digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view body = text;
        if (!body.empty() && body.front() == '-') body.remove_prefix(1);
        auto slash = body.find('/');
        std::string_view numer = body.substr(0, slash);
        std::string_view denom = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
        if (!digits(numer) || !digits(denom))
            throw parse_error("malformed rational '" + std::string(text) + "'");
        mpq_class q;
        q.get_num().set_str(std::string(text.substr(0, text.size() - body.size())) + std::string(numer), 10);
        q.get_den().set_str(std::string(denom), 10);
        if (q.get_den() == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
        q.canonicalize();
        return Rational(q);
    }

    [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    [[nodiscard]] int sign() const {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    [[nodiscard]] mpq_class to_mpq() const {
        if (big_) return *big_;
        mpq_class q;
        q.get_num() = to_mpz(num_);
        q.get_den() = to_mpz(den_);
        return q;
    }

    [[nodiscard]] std::string str() const {
        if (big_) return big_->get_str();
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator-(const Rational& a) {
        if (a.big_) return Rational(mpq_class(-*a.big_));
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
        if (a.den_ == 1 && b.den_ == 1) return from_wide(static_cast<i128>(a.num_) + b.num_, 1);
        return from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                         static_cast<i128>(a.den_) * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
        if (a.num_ == 0 || b.num_ == 0) return {};
        if (a.den_ == 1 && b.den_ == 1) return from_wide(static_cast<i128>(a.num_) * b.num_, 1);
        // Cross-cancel first so the product is already reduced.
        std::int64_t g1 = gcd64(a.num_, b.den_);
        std::int64_t g2 = gcd64(b.num_, a.den_);
        return from_reduced(static_cast<i128>(a.num_ / g1) * (b.num_ / g2),
                            static_cast<i128>(a.den_ / g2) * (b.den_ / g1));
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return a * b.reciprocal();
    }

    [[nodiscard]] Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("rational division by zero");
        if (big_) return Rational(mpq_class(1 / *big_));
        Rational r;
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = num_ < 0 ? -num_ : num_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            i128 l = static_cast<i128>(a.num_) * b.den_;
            i128 r = static_cast<i128>(b.num_) * a.den_;
            return l < r ? std::strong_ordering::less
                         : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
        }
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    // True when the value is held inline (exposed for the promotion tests).
    [[nodiscard]] bool is_small() const { return !big_; }

private:
    using i128 = __int128;
    using u128 = unsigned __int128;
    static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;

    // Binary gcd; far cheaper than repeated 128-bit modulo.
    static std::uint64_t bgcd(std::uint64_t x, std::uint64_t y) {
        if (x == 0) return y;
        if (y == 0) return x;
        const int shift = __builtin_ctzll(x | y);
        x >>= __builtin_ctzll(x);
        do {
            y >>= __builtin_ctzll(y);
            if (x > y) std::swap(x, y);
            y -= x;
        } while (y != 0);
        return x << shift;
    }

    static std::int64_t gcd64(std::int64_t a, std::int64_t b) {
        std::uint64_t x = a < 0 ? -static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
        std::uint64_t y = b < 0 ? -static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
        return static_cast<std::int64_t>(bgcd(x, y));
    }

    static u128 gcd128(u128 x, u128 y) {
        while (y != 0 && ((x >> 64) != 0 || (y >> 64) != 0)) {
            u128 t = x % y;
            x = y;
            y = t;
        }
        if (y == 0) return x;
        return bgcd(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y));
    }

    static mpz_class to_mpz(i128 v) {
        bool neg = v < 0;
        u128 mag = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
        std::uint64_t limbs[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
        mpz_class z;
        mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
        if (neg) z = -z;
        return z;
    }

    static Rational from_wide(i128 n, i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (d == 1) return from_reduced(n, d);
        if (n > kMin && n <= kMax && d <= kMax) {
            auto n64 = static_cast<std::int64_t>(n), d64 = static_cast<std::int64_t>(d);
            std::int64_t g = gcd64(n64, d64);
            return from_reduced(n64 / g, d64 / g);
        }
        u128 g = gcd128(n < 0 ? -static_cast<u128>(n) : static_cast<u128>(n), static_cast<u128>(d));
        if (g > 1) {
            n /= static_cast<i128>(g);
            d /= static_cast<i128>(g);
        }
        return from_reduced(n, d);
    }

    static Rational from_reduced(i128 n, i128 d) {
        Rational r;
        if (n > kMin && n <= kMax && d <= kMax) {
            r.num_ = static_cast<std::int64_t>(n);
            r.den_ = n == 0 ? 1 : static_cast<std::int64_t>(d);
            return r;
        }
        r.promote_from(n, d);
        return r;
    }

    void promote_from(i128 n, i128 d) {
        mpq_class q;
        q.get_num() = to_mpz(n);
        q.get_den() = to_mpz(d);
        q.canonicalize();
        big_ = std::make_shared<const mpq_class>(std::move(q));
        num_ = 0;
        den_ = 1;
    }

    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        *this = from_wide(n, d);
    }

    void assign(const mpq_class& q) {
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != kMin) {
            num_ = q.get_num().get_si();
            den_ = q.get_den().get_si();
            big_.reset();
        } else {
            big_ = std::make_shared<const mpq_class>(q);
            num_ = 0;
            den_ = 1;
        }
    }
};

}  // namespace linrel
