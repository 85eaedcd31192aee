#pragma once

// The free Lie algebra on X, Y: formal bracket trees, the Lyndon basis and
// coordinates in it, derivations, and membership in the two ideals
// [[L,L],[L,L]] and [L',[L',L']].

#include "mbch/assoc.hpp"
#include "mbch/rational.hpp"
#include "mbch/word.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mbch {

/// Immutable formal bracket expression: a generator or an ordered pair.
class BracketTree {
public:
    static BracketTree generator(Letter l);
    static BracketTree bracket(const BracketTree& a, const BracketTree& b);

    [[nodiscard]] bool is_leaf() const { return !node_->left; }
    [[nodiscard]] Letter letter() const { return node_->letter; }
    [[nodiscard]] const BracketTree& left() const { return *node_->left; }
    [[nodiscard]] const BracketTree& right() const { return *node_->right; }
    [[nodiscard]] int degree() const { return node_->degree; }

    /// Nested notation, e.g. "[X,[X,Y]]".
    [[nodiscard]] std::string to_string() const;
    /// Compact notation with right-nested runs written as long commutators,
    /// e.g. "[X^2Y]" or "[[XY],Y]".
    [[nodiscard]] std::string to_long_notation() const;

    friend bool operator==(const BracketTree& a, const BracketTree& b) { return (a <=> b) == 0; }
    friend std::strong_ordering operator<=>(const BracketTree& a, const BracketTree& b);

private:
    struct Node {
        int degree = 1;
        Letter letter = Letter::X;
        std::shared_ptr<const BracketTree> left;
        std::shared_ptr<const BracketTree> right;
    };
    explicit BracketTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Finite linear combination of bracket trees; possibly inhomogeneous.
/// Trees are not normalised; use to_lyndon_coords for canonical coordinates.
class LieElement {
public:
    using Terms = std::map<BracketTree, Rational>;

    LieElement() = default;
    static LieElement generator(Letter l);
    static LieElement from_tree(const BracketTree& t, const Rational& c = 1);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// Degree of every term if homogeneous, std::nullopt otherwise (or when zero).
    [[nodiscard]] std::optional<int> homogeneous_degree() const;
    [[nodiscard]] int max_degree() const;
    /// Terms of degree exactly d.
    [[nodiscard]] LieElement component(int d) const;

    void add_term(const BracketTree& t, const Rational& c);

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rational& c);

    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator-(LieElement a) { return a *= Rational(-1); }
    friend LieElement operator*(LieElement a, const Rational& c) { return a *= c; }
    friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }

private:
    Terms terms_;
};

/// Truncated graded Lie series: one homogeneous LieElement per degree <= truncation.
class LieSeries {
public:
    explicit LieSeries(int truncation = 1);
    /// Splits e into homogeneous components, dropping degrees > truncation.
    LieSeries(const LieElement& e, int truncation);

    [[nodiscard]] int truncation() const { return truncation_; }
    [[nodiscard]] const std::map<int, LieElement>& graded() const { return graded_; }
    [[nodiscard]] LieElement component(int d) const;
    /// All components summed into one (inhomogeneous) element.
    [[nodiscard]] LieElement total() const;
    [[nodiscard]] bool is_zero() const { return graded_.empty(); }

    LieSeries& operator+=(const LieSeries& o);
    LieSeries& operator-=(const LieSeries& o);
    LieSeries& operator*=(const Rational& c);

    friend LieSeries operator+(LieSeries a, const LieSeries& b) { return a += b; }
    friend LieSeries operator-(LieSeries a, const LieSeries& b) { return a -= b; }
    friend LieSeries operator*(LieSeries a, const Rational& c) { return a *= c; }

private:
    void add(const LieElement& e);
    int truncation_;
    std::map<int, LieElement> graded_;
};

/// Coordinates in the Lyndon basis, keyed by Lyndon word and ordered by
/// (degree, word). Zero coordinates are not stored.
using LyndonCoords = std::map<Word, Rational>;

/// Right-normed bracket [A1,[A2,[...,[A_{m-1},A_m]...]]]. A word of length
/// >= 2 whose last two letters agree gives the zero element.
LieElement long_commutator(Word w);
LieElement long_commutator(std::string_view letters);

/// Bilinear bracket of formal trees.
LieElement bracket(const LieElement& a, const LieElement& b);

/// Associative expansion [A,B] -> AB - BA, truncated at word length n.
NCSeries to_assoc(const LieElement& a, int truncation);
NCSeries to_assoc(const LieSeries& a);

bool is_lyndon(Word w);
/// Lyndon words of length d over X < Y, in lexicographic order.
std::vector<Word> lyndon_words(int degree);
/// Standard factorisation w = uv, v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(Word w);
/// Bracketing of a Lyndon word along its standard factorisation.
BracketTree standard_bracketing(Word w);

LyndonCoords to_lyndon_coords(const LieElement& a);
LyndonCoords to_lyndon_coords(const LieSeries& a);
/// Sum c_w * standard_bracketing(w).
LieElement from_lyndon_coords(const LyndonCoords& c);
/// Rewrites every component through Lyndon coordinates.
LieSeries normalized(const LieSeries& s);

/// Lyndon coordinates of the degree-d component of an associative series,
/// or std::nullopt when that component is not a Lie element.
std::optional<LyndonCoords> extract_lie(const NCSeries& a, int degree);

/// Derivation given by its images of the generators.
struct Derivation {
    LieSeries image_x;
    LieSeries image_y;
};

/// Extends the generator images by linearity and the Leibniz rule,
/// discarding every term of degree > truncation.
LieSeries apply_derivation(const Derivation& d, const LieSeries& target, int truncation);
LieElement apply_derivation(const Derivation& d, const LieElement& target, int truncation);

enum class LieIdeal {
    metabelian,  // [[L,L],[L,L]]
    deeper,      // [L',[L',L']], L' = [L,L]
};

/// Exact membership test for a homogeneous element by Gaussian elimination
/// against a spanning set of the ideal's degree component.
bool ideal_membership(const LieElement& a, LieIdeal ideal);

}  // namespace mbch
