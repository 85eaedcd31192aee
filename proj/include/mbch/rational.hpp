#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mbch {

/// Arbitrary-precision exact rational, always kept in lowest terms with a
/// positive denominator. Thin value wrapper around GMP's mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
    Rational(long numerator, long denominator);
    explicit Rational(const mpz_class& integer) : q_(integer) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
    /// input or a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    /// Always "p/q", also for integers ("3/1", "0/1").
    [[nodiscard]] std::string to_fraction_string() const;
    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    /// this += a * b without a temporary.
    void add_product(const Rational& a, const Rational& b);
    void add_product(const Rational& a, long b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

/// (-1)^n as a Rational.
inline Rational sign_power(long n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

/// n! as an exact integer.
mpz_class factorial(unsigned long n);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

}  // namespace mbch
