#pragma once

// Truncated noncommutative power series in X, Y: the associative ambient
// algebra in which exponentials and logarithms are computed directly.

#include "mbch/rational.hpp"
#include "mbch/word.hpp"

#include <map>
#include <string>

namespace mbch {

/// sum c_w w over words of length <= truncation; zero coefficients never stored.
class NCSeries {
public:
    using Terms = std::map<Word, Rational>;

    explicit NCSeries(int truncation = 0);

    static NCSeries one(int truncation) { return monomial(Word(), 1, truncation); }
    static NCSeries generator(Letter l, int truncation) { return monomial(Word::letter(l), 1, truncation); }
    static NCSeries monomial(Word w, const Rational& c, int truncation);

    [[nodiscard]] int truncation() const { return truncation_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational constant_term() const;
    /// Terms whose words have length exactly d.
    [[nodiscard]] NCSeries component(int d) const;
    [[nodiscard]] NCSeries truncated(int n) const;

    void add_term(Word w, const Rational& c);

    NCSeries& operator+=(const NCSeries& o);
    NCSeries& operator-=(const NCSeries& o);
    NCSeries& operator*=(const Rational& c);

    friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
    friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
    friend NCSeries operator-(NCSeries a) { return a *= Rational(-1); }
    friend NCSeries operator*(NCSeries a, const Rational& c) { return a *= c; }
    friend NCSeries operator*(const Rational& c, NCSeries a) { return a *= c; }
    friend NCSeries operator*(const NCSeries& a, const NCSeries& b);

    friend bool operator==(const NCSeries&, const NCSeries&) = default;
    /// Coefficient equality through word length n.
    [[nodiscard]] bool equal_through(const NCSeries& o, int n) const;

    [[nodiscard]] std::string to_string() const;

private:
    int truncation_;
    Terms terms_;
};

NCSeries nc_mul(const NCSeries& a, const NCSeries& b);

/// sum a^n / n!; throws DomainError("nonzero constant term").
NCSeries nc_exp(const NCSeries& a);

/// sum (-1)^(n-1) (a-1)^n / n; throws DomainError("constant term must be 1").
NCSeries nc_log(const NCSeries& a);

/// ln(e^X e^Y) truncated at word length n.
NCSeries bch_log_oracle(int truncation);

/// Throws DomainError("word beyond truncation") when |w| > truncation.
Rational nc_coefficient(const NCSeries& a, Word w);

/// Substitution X -> -Y, Y -> -X.
NCSeries nc_negswap(const NCSeries& a);

}  // namespace mbch
