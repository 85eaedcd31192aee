#pragma once

// The free metabelian Lie algebra L / [[L,L],[L,L]] on X, Y with basis
// X, Y, B(k,l) = [X^k Y^l X Y]. On the commutator part ad X and ad Y commute,
// so an element a X + b Y + f(x,y)[XY] is described by two scalars and a
// commutative power series f whose coefficient of x^k y^l multiplies B(k,l).

#include "mbch/freelie.hpp"
#include "mbch/series.hpp"

#include <map>
#include <string>

namespace mbch {

class MetabelianElement {
public:
    /// Keys (k, l) with k + l + 2 <= truncation, ordered by (k + l, k).
    using Table = std::map<Exponent, Rational>;

    explicit MetabelianElement(int truncation = 2);
    /// a X + b Y + f(x,y)[XY]; f is cut to degree truncation - 2.
    MetabelianElement(int truncation, Rational a, Rational b, const BiSeries& f);

    [[nodiscard]] int truncation() const { return truncation_; }
    [[nodiscard]] const Rational& x_coeff() const { return a_; }
    [[nodiscard]] const Rational& y_coeff() const { return b_; }
    [[nodiscard]] const Table& table() const { return table_; }
    [[nodiscard]] Rational coeff(int k, int l) const;

    /// The table as a commutative series f(x,y) with truncation max(N - 2, 0).
    [[nodiscard]] BiSeries operator_series() const;
    /// Terms of Lie degree exactly n (n = 1 gives the X, Y part).
    [[nodiscard]] MetabelianElement degree_part(int n) const;
    [[nodiscard]] MetabelianElement truncated(int n) const;
    /// Free Lie algebra representative: a X + b Y + sum c_kl [X^k Y^l X Y].
    [[nodiscard]] LieElement to_lie() const;

    void set_x(const Rational& a) { a_ = a; }
    void set_y(const Rational& b) { b_ = b; }
    void add_term(int k, int l, const Rational& c);

    MetabelianElement& operator+=(const MetabelianElement& o);
    MetabelianElement& operator-=(const MetabelianElement& o);
    MetabelianElement& operator*=(const Rational& c);
    friend MetabelianElement operator+(MetabelianElement a, const MetabelianElement& b) { return a += b; }
    friend MetabelianElement operator-(MetabelianElement a, const MetabelianElement& b) { return a -= b; }

    friend bool operator==(const MetabelianElement&, const MetabelianElement&) = default;

    /// "X + Y + 1/2 [XY] + 1/12 [X^2Y] ..." in long-commutator notation.
    [[nodiscard]] std::string to_string() const;

private:
    int truncation_;
    Rational a_;
    Rational b_;
    Table table_;
};

/// [X, e] and [Y, e] in the metabelian quotient, truncated at e's truncation.
MetabelianElement ad_x(const MetabelianElement& e);
MetabelianElement ad_y(const MetabelianElement& e);

/// e(-Y, -X).
MetabelianElement metabelian_negswap(const MetabelianElement& e);

/// Normal form of a Lie element modulo [[L,L],[L,L]] in the basis X, Y, B(k,l).
MetabelianElement project(const LieElement& e, int truncation);
MetabelianElement project(const LieSeries& e);

/// h(x,y) = (1/y)(1 - (e^x - 1)/x * (x + y)/(e^{x+y} - 1)) through total degree N.
BiSeries h_series(int truncation);

/// X + Y + h(x,y)[XY]: the metabelian image of ln(e^X e^Y).
MetabelianElement hausdorff_closed(int truncation);

/// c(x,y) = sum c_rs x^r y^s, the coefficients of X^r Y^s in ln(e^X e^Y).
BiSeries goldberg_c(int truncation);

/// Operator series of the metabelian Zassenhaus solution, so that
/// sum_{n>=2} C_n = z(x,y)[XY]; truncated at total degree N.
BiSeries zassenhaus_operator(int truncation);

/// sum_{n=2}^{N} C_n as one element.
MetabelianElement zassenhaus_closed(int truncation);

/// C_2, ..., C_N keyed by degree.
std::map<int, MetabelianElement> zassenhaus_components(int truncation);

/// f(x,y) through total degree N with x f(x,y) - y f(-y,-x) = h(x,y) - 1/2,
/// built from the even/odd parts of h plus the homogeneous term y g(x,y).
/// g is read as a polynomial; throws DomainError("g violates antisymmetry")
/// unless g(-y,-x) = -g(x,y).
BiSeries kv_f_series(int truncation, const BiSeries& g);

/// F = a X + Y/4 + f(x,y)[XY] solving H - X - Y = [X, F(X,Y)] + [Y, F(-Y,-X)].
MetabelianElement kv_solve(int truncation, const Rational& a, const BiSeries& g);
MetabelianElement kv_solve(int truncation);

/// Residual of the symmetrised commutator equation:
/// [X, F] + [Y, F(-Y,-X)] - (H - X - Y), valid through degree
/// min(truncation, F.truncation() + 1).
MetabelianElement kv_residual(const MetabelianElement& f, int truncation);

/// True when the residual vanishes.
bool kv_verify(const MetabelianElement& f, int truncation);

}  // namespace mbch
