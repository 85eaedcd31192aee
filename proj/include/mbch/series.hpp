#pragma once

// Bernoulli numbers and truncated commutative power series in two variables.

#include "mbch/rational.hpp"

#include <compare>
#include <map>
#include <string>

namespace mbch {

/// B_n with the convention B_1 = -1/2, from
/// sum_{k=1}^{m} C(m+1, k) B_k = -1 (m >= 1), B_0 = 1.
/// Results are cached process-wide; safe to call concurrently.
Rational bernoulli(int n);

/// Exponent pair of a monomial x^i y^j. Ordered by total degree, then by i.
struct Exponent {
    int i = 0;
    int j = 0;

    [[nodiscard]] int degree() const { return i + j; }

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.i <=> b.i;
    }
};

/// Truncated bivariate power series sum c_ij x^i y^j with i + j <= truncation.
/// Zero coefficients are never stored.
class BiSeries {
public:
    using Terms = std::map<Exponent, Rational>;

    explicit BiSeries(int truncation = 0);

    static BiSeries constant(const Rational& c, int truncation);
    static BiSeries monomial(int i, int j, const Rational& c, int truncation);
    static BiSeries x(int truncation) { return monomial(1, 0, 1, truncation); }
    static BiSeries y(int truncation) { return monomial(0, 1, 1, truncation); }

    [[nodiscard]] int truncation() const { return truncation_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coeff(int i, int j) const;
    [[nodiscard]] Rational constant_term() const { return coeff(0, 0); }
    /// Lowest total degree with a nonzero coefficient; -1 for the zero series.
    [[nodiscard]] int lowest_degree() const;
    /// Highest stored total degree; -1 for the zero series.
    [[nodiscard]] int highest_degree() const;
    /// Drops every term of total degree > n; also lowers the truncation to n.
    [[nodiscard]] BiSeries truncated(int n) const;
    /// Terms of total degree exactly d.
    [[nodiscard]] BiSeries homogeneous_part(int d) const;

    /// Adds c to the coefficient of x^i y^j; terms beyond the truncation are ignored.
    void add_term(int i, int j, const Rational& c);

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    BiSeries& operator*=(const Rational& c);

    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator-(BiSeries a) { return a *= Rational(-1); }
    friend BiSeries operator*(BiSeries a, const Rational& c) { return a *= c; }
    friend BiSeries operator*(const Rational& c, BiSeries a) { return a *= c; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

    /// Exact equality of truncation and coefficients.
    friend bool operator==(const BiSeries&, const BiSeries&) = default;
    /// Coefficient equality through total degree n (truncations ignored).
    [[nodiscard]] bool equal_through(const BiSeries& o, int n) const;

    /// Human-readable form such as "1/2 + 1/12*x - 1/12*y"; the zero series is "0".
    [[nodiscard]] std::string to_string() const;

private:
    int truncation_;
    Terms terms_;
};

BiSeries bs_add(const BiSeries& a, const BiSeries& b);
BiSeries bs_mul(const BiSeries& a, const BiSeries& b);

/// Multiplicative inverse; throws DomainError("non-unit series") when the
/// constant term is zero.
BiSeries bs_inverse(const BiSeries& a);

/// Returns q with q * d == a through total degree
/// min(trunc a, trunc d) - lowest_degree(d). Throws InexactDivision otherwise.
BiSeries bs_divide_exact(const BiSeries& a, const BiSeries& d);

/// a(-y, -x).
BiSeries bs_subst_negswap(const BiSeries& a);

/// a(sx * x, sy * y) for integer scalings; a(x, -y) is bs_scale(a, 1, -1).
BiSeries bs_scale(const BiSeries& a, int sx, int sy);

/// a(y, x).
BiSeries bs_swap(const BiSeries& a);

struct ParityParts {
    BiSeries even;
    BiSeries odd;
};

/// Splits into even and odd total-degree parts.
ParityParts bs_parity_split(const BiSeries& a);

/// Entire functions of one variable that the closed formulas are built from.
enum class NamedSeries {
    expm1_over_t,  // (e^t - 1)/t
    t_over_expm1,  // t/(e^t - 1) = sum B_n t^n / n!
    exp,           // e^t
    expm1,         // e^t - 1
    log1p,         // ln(1 + t)
};

/// Linear form cx * x + cy * y substituted for t.
struct LinearForm {
    int cx = 0;
    int cy = 0;
};

namespace linear {
inline constexpr LinearForm x{1, 0};
inline constexpr LinearForm y{0, 1};
inline constexpr LinearForm neg_x{-1, 0};
inline constexpr LinearForm neg_y{0, -1};
inline constexpr LinearForm x_plus_y{1, 1};
inline constexpr LinearForm neg_x_minus_y{-1, -1};
}  // namespace linear

/// Coefficient of t^n in the named series.
Rational named_coefficient(NamedSeries name, int n);

BiSeries bs_named(NamedSeries name, LinearForm arg, int truncation);

}  // namespace mbch
