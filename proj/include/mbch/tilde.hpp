#pragma once

// The quotient L / [L',[L',L']], L' = [L,L], in the basis X, Y, {m,n} and
// [{k,l},{m,n}], where {m,n} is the long commutator [X^m Y^(n+1) X].

#include "mbch/freelie.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace mbch {

/// Index pair of {m,n}; degree m + n + 2. Ordered by degree, then m.
struct LongIndex {
    int m = 0;
    int n = 0;

    [[nodiscard]] int degree() const { return m + n + 2; }
    friend bool operator==(const LongIndex&, const LongIndex&) = default;
    friend std::strong_ordering operator<=>(const LongIndex& a, const LongIndex& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.m <=> b.m;
    }
};

/// Index of [{k,l},{m,n}] with (k > m) or (k == m and l > n).
struct PairIndex {
    LongIndex first;
    LongIndex second;

    [[nodiscard]] int degree() const { return first.degree() + second.degree(); }
    friend bool operator==(const PairIndex&, const PairIndex&) = default;
    friend std::strong_ordering operator<=>(const PairIndex& a, const PairIndex& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = a.first.m <=> b.first.m; c != 0) return c;
        if (auto c = a.first.n <=> b.first.n; c != 0) return c;
        if (auto c = a.second.m <=> b.second.m; c != 0) return c;
        return a.second.n <=> b.second.n;
    }
};

/// True when [A,B] is in basis order: A.m > B.m, or A.m == B.m and A.n > B.n.
bool pair_in_basis_order(const LongIndex& a, const LongIndex& b);

class TildeElement {
public:
    using Linear = std::map<LongIndex, Rational>;
    using Quadratic = std::map<PairIndex, Rational>;

    explicit TildeElement(int truncation = 2);

    static TildeElement long_commutator(LongIndex i, int truncation, const Rational& c = 1);

    [[nodiscard]] int truncation() const { return truncation_; }
    [[nodiscard]] const Rational& x_coeff() const { return a_; }
    [[nodiscard]] const Rational& y_coeff() const { return b_; }
    [[nodiscard]] const Linear& linear() const { return linear_; }
    [[nodiscard]] const Quadratic& quadratic() const { return quadratic_; }
    [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero() && linear_.empty() && quadratic_.empty(); }
    [[nodiscard]] Rational linear_coeff(int m, int n) const;
    [[nodiscard]] Rational quadratic_coeff(LongIndex a, LongIndex b) const;

    void add_x(const Rational& c) { a_ += c; }
    void add_y(const Rational& c) { b_ += c; }
    /// Terms beyond the truncation are ignored.
    void add_linear(LongIndex i, const Rational& c);
    /// Adds c [A,B], normalising to basis order ([A,A] = 0, [A,B] = -[B,A]).
    void add_pair(LongIndex a, LongIndex b, const Rational& c);

    TildeElement& operator+=(const TildeElement& o);
    TildeElement& operator-=(const TildeElement& o);
    TildeElement& operator*=(const Rational& c);
    friend TildeElement operator+(TildeElement a, const TildeElement& b) { return a += b; }
    friend TildeElement operator-(TildeElement a, const TildeElement& b) { return a -= b; }
    friend TildeElement operator*(TildeElement a, const Rational& c) { return a *= c; }

    friend bool operator==(const TildeElement&, const TildeElement&) = default;

    /// "X + Y - 1/2 {0,0} + ... + c [{1,0},{0,0}]".
    [[nodiscard]] std::string to_string() const;

private:
    int truncation_;
    Rational a_;
    Rational b_;
    Linear linear_;
    Quadratic quadratic_;
};

/// One bracket [A,B] with arbitrary index order.
struct RawPair {
    LongIndex a;
    LongIndex b;
    Rational c;
};

TildeElement tilde_normalize(const std::vector<RawPair>& pairs, int truncation);

/// ad X or ad Y on e; brackets of quadratic terms keep only linear parts.
TildeElement tilde_act(Letter gen, const TildeElement& e);

/// The derivation D_Y (X -> 0, Y -> H_1) on e, truncated at N.
TildeElement tilde_dy(const TildeElement& e, int truncation);

/// X + Y + sum_n (B_n/n!) {0,n-1} + sum_{m>=2} H_(m), with
/// H_(2) = 1/2 sum_k (B_k/k!) D_Y{0,k-1} and H_(m+1) = D_Y H_(m) / (m+1).
TildeElement hausdorff_tilde(int truncation);

/// H_(2), H_(3), ... of the recursion above (index 0 holds H_(2)).
std::vector<TildeElement> hausdorff_tilde_terms(int truncation);

/// Concrete free Lie algebra element: {m,n} -> [X^m Y^(n+1) X], quadratic
/// terms -> brackets of the expansions.
LieElement expand_to_free(const TildeElement& e);

}  // namespace mbch
