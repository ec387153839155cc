#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace kemeny {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    template <std::unsigned_integral U>
    Rational(U value) : value_(static_cast<unsigned long>(value)) {}

    Rational(long numerator, long denominator) {
        if (denominator == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
        value_.canonicalize();
    }

    Rational(const mpz_class& numerator, const mpz_class& denominator) {
        if (denominator == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }

    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Accepts "p", "-p", "p/q" in ASCII decimal.
    static Rational parse(std::string_view text) {
        auto digits_only = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s) {
                if (c < '0' || c > '9') return false;
            }
            return true;
        };
        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }
        const auto slash = body.find('/');
        const std::string_view num = body.substr(0, slash);
        const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) {
            throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
        }
        if (negative) n = -n;
        return Rational(n, d);
    }

    /// "p/q", or just "p" when the denominator is 1.
    [[nodiscard]] std::string str() const { return value_.get_str(10); }

    [[nodiscard]] double to_double() const { return value_.get_d(); }
    [[nodiscard]] const mpq_class& mpq() const { return value_; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs) {
        if (rhs.is_zero()) throw std::domain_error("rational division by zero");
        value_ /= rhs.value_;
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

private:
    mpq_class value_{0};
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

/// Smallest rational with denominator `den` that is >= sqrt(x), for x >= 0.
inline Rational sqrt_ceiling(const Rational& x, unsigned long den) {
    if (x.sign() < 0) throw std::domain_error("square root of a negative rational");
    // ceil(sqrt(p/q) * den) = ceil(sqrt(p * den^2 / q))
    const mpz_class scaled_num = x.numerator() * den * den;
    mpz_class floor_ratio = scaled_num / x.denominator();
    if (floor_ratio * x.denominator() != scaled_num) floor_ratio += 1;  // ceiling of the quotient
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), floor_ratio.get_mpz_t());
    if (root * root < floor_ratio) root += 1;
    return Rational(root, mpz_class(den));
}

/// Exact square root when x is the square of a rational.
inline bool exact_sqrt(const Rational& x, Rational& out) {
    if (x.sign() < 0) return false;
    const mpz_class num = x.numerator();
    const mpz_class den = x.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rational(rn, rd);
    return true;
}

// Scalar hooks so the linear algebra templates work over Rational and double.
inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(double x) { return x; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline Rational magnitude(const Rational& x) { return abs(x); }
inline double magnitude(double x) { return std::abs(x); }

}  // namespace kemeny
