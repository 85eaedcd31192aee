#include "mbch/freelie.hpp"

#include "mbch/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace mbch {

// ---------------------------------------------------------------------------
// BracketTree

BracketTree BracketTree::generator(Letter l) {
    auto n = std::make_shared<Node>();
    n->letter = l;
    return BracketTree(std::move(n));
}

BracketTree BracketTree::bracket(const BracketTree& a, const BracketTree& b) {
    auto n = std::make_shared<Node>();
    n->degree = a.degree() + b.degree();
    n->left = std::make_shared<const BracketTree>(a);
    n->right = std::make_shared<const BracketTree>(b);
    return BracketTree(std::move(n));
}

std::strong_ordering operator<=>(const BracketTree& a, const BracketTree& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_leaf()) return a.letter() <=> b.letter();
    if (auto c = a.left() <=> b.left(); c != 0) return c;
    return a.right() <=> b.right();
}

std::string BracketTree::to_string() const {
    if (is_leaf()) return std::string(1, letter_char(letter()));
    return "[" + left().to_string() + "," + right().to_string() + "]";
}

namespace {

// Letters of a right-nested chain [A1,[A2,...[A_{m-1},A_m]]] of generators,
// or empty if the tree is not such a chain.
std::string right_chain(const BracketTree& t) {
    std::string letters;
    const BracketTree* cur = &t;
    while (!cur->is_leaf()) {
        if (!cur->left().is_leaf()) return {};
        letters.push_back(letter_char(cur->left().letter()));
        cur = &cur->right();
    }
    letters.push_back(letter_char(cur->letter()));
    return letters;
}

std::string compress_powers(const std::string& letters) {
    std::string out;
    for (std::size_t i = 0; i < letters.size();) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        out.push_back(letters[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace

std::string BracketTree::to_long_notation() const {
    if (is_leaf()) return std::string(1, letter_char(letter()));
    const std::string chain = right_chain(*this);
    if (!chain.empty()) return "[" + compress_powers(chain) + "]";
    return "[" + left().to_long_notation() + "," + right().to_long_notation() + "]";
}

// ---------------------------------------------------------------------------
// LieElement

LieElement LieElement::generator(Letter l) { return from_tree(BracketTree::generator(l)); }

LieElement LieElement::from_tree(const BracketTree& t, const Rational& c) {
    LieElement e;
    e.add_term(t, c);
    return e;
}

std::optional<int> LieElement::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    if (terms_.rbegin()->first.degree() != d) return std::nullopt;
    return d;
}

int LieElement::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

LieElement LieElement::component(int d) const {
    LieElement out;
    for (const auto& [t, c] : terms_) {
        if (t.degree() == d) out.terms_.emplace_hint(out.terms_.end(), t, c);
    }
    return out;
}

void LieElement::add_term(const BracketTree& t, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, v] : terms_) v *= c;
    return *this;
}

// ---------------------------------------------------------------------------
// LieSeries

LieSeries::LieSeries(int truncation) : truncation_(truncation) {
    if (truncation < 1) throw std::invalid_argument("LieSeries: truncation must be >= 1");
}

LieSeries::LieSeries(const LieElement& e, int truncation) : LieSeries(truncation) { add(e); }

void LieSeries::add(const LieElement& e) {
    for (const auto& [t, c] : e.terms()) {
        if (t.degree() > truncation_) continue;
        auto& slot = graded_[t.degree()];
        slot.add_term(t, c);
        if (slot.is_zero()) graded_.erase(t.degree());
    }
}

LieElement LieSeries::component(int d) const {
    auto it = graded_.find(d);
    return it == graded_.end() ? LieElement() : it->second;
}

LieElement LieSeries::total() const {
    LieElement out;
    for (const auto& [d, e] : graded_) out += e;
    return out;
}

LieSeries& LieSeries::operator+=(const LieSeries& o) {
    if (o.truncation_ < truncation_) {
        truncation_ = o.truncation_;
        graded_.erase(graded_.upper_bound(truncation_), graded_.end());
    }
    add(o.total());
    return *this;
}

LieSeries& LieSeries::operator-=(const LieSeries& o) {
    if (o.truncation_ < truncation_) {
        truncation_ = o.truncation_;
        graded_.erase(graded_.upper_bound(truncation_), graded_.end());
    }
    add(-o.total());
    return *this;
}

LieSeries& LieSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        graded_.clear();
        return *this;
    }
    for (auto& [d, e] : graded_) e *= c;
    return *this;
}

// ---------------------------------------------------------------------------
// Brackets and associative expansion

LieElement long_commutator(Word w) {
    if (w.empty()) throw std::invalid_argument("long_commutator: empty word");
    const int n = w.length();
    if (n >= 2 && w.at(n - 1) == w.at(n - 2)) return {};
    BracketTree t = BracketTree::generator(w.at(n - 1));
    for (int k = n - 2; k >= 0; --k) t = BracketTree::bracket(BracketTree::generator(w.at(k)), t);
    return LieElement::from_tree(t);
}

LieElement long_commutator(std::string_view letters) { return long_commutator(Word::from_string(letters)); }

LieElement bracket(const LieElement& a, const LieElement& b) {
    LieElement out;
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) out.add_term(BracketTree::bracket(ta, tb), ca * cb);
    }
    return out;
}

namespace {

/// Integer-coefficient homogeneous associative polynomial, dense over the
/// 2^degree words of its degree.
struct IntExpansion {
    int degree = 0;
    std::vector<std::int64_t> coeffs;
};

IntExpansion expand(const BracketTree& t) {
    if (t.is_leaf()) {
        IntExpansion e{1, std::vector<std::int64_t>(2, 0)};
        e.coeffs[static_cast<std::size_t>(t.letter())] = 1;
        return e;
    }
    const IntExpansion a = expand(t.left());
    const IntExpansion b = expand(t.right());
    IntExpansion out{a.degree + b.degree, std::vector<std::int64_t>(std::size_t{1} << (a.degree + b.degree), 0)};
    for (std::size_t wa = 0; wa < a.coeffs.size(); ++wa) {
        const std::int64_t ca = a.coeffs[wa];
        if (ca == 0) continue;
        for (std::size_t wb = 0; wb < b.coeffs.size(); ++wb) {
            const std::int64_t cb = b.coeffs[wb];
            if (cb == 0) continue;
            out.coeffs[(wa << b.degree) | wb] += ca * cb;
            out.coeffs[(wb << a.degree) | wa] -= ca * cb;
        }
    }
    return out;
}

struct DegreeBasis {
    std::vector<Word> words;
    std::vector<BracketTree> trees;
    // Sparse expansions of the standard bracketings: (word bits, coefficient).
    std::vector<std::vector<std::pair<std::uint64_t, std::int64_t>>> expansions;
};

const DegreeBasis& degree_basis(int d) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const DegreeBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[d];
    if (!slot) {
        auto basis = std::make_unique<DegreeBasis>();
        basis->words = lyndon_words(d);
        for (const Word& w : basis->words) {
            basis->trees.push_back(standard_bracketing(w));
            const IntExpansion e = expand(basis->trees.back());
            std::vector<std::pair<std::uint64_t, std::int64_t>> sparse;
            for (std::size_t bits = 0; bits < e.coeffs.size(); ++bits) {
                if (e.coeffs[bits] != 0) sparse.emplace_back(bits, e.coeffs[bits]);
            }
            basis->expansions.push_back(std::move(sparse));
        }
        slot = std::move(basis);
    }
    return *slot;
}

using DenseComponent = std::vector<Rational>;

/// Triangular elimination of a dense degree-d associative component against
/// the Lyndon basis; on return `acc` holds the non-Lie residual.
LyndonCoords eliminate(DenseComponent& acc, int d) {
    const DegreeBasis& basis = degree_basis(d);
    LyndonCoords coords;
    for (std::size_t k = 0; k < basis.words.size(); ++k) {
        const Word w = basis.words[k];
        const Rational coord = acc[w.bits()];
        if (coord.is_zero()) continue;
        for (const auto& [bits, c] : basis.expansions[k]) acc[bits].add_product(coord, -c);
        coords.emplace(w, coord);
    }
    return coords;
}

bool all_zero(const DenseComponent& acc) {
    return std::all_of(acc.begin(), acc.end(), [](const Rational& r) { return r.is_zero(); });
}

std::map<int, DenseComponent> dense_components(const LieElement& a) {
    std::map<int, DenseComponent> by_degree;
    for (const auto& [t, c] : a.terms()) {
        auto& acc = by_degree[t.degree()];
        if (acc.empty()) acc.resize(std::size_t{1} << t.degree());
        const IntExpansion e = expand(t);
        for (std::size_t bits = 0; bits < e.coeffs.size(); ++bits) {
            if (e.coeffs[bits] != 0) acc[bits].add_product(c, static_cast<long>(e.coeffs[bits]));
        }
    }
    return by_degree;
}

}  // namespace

NCSeries to_assoc(const LieElement& a, int truncation) {
    NCSeries out(truncation);
    for (const auto& [d, acc] : dense_components(a)) {
        if (d > truncation) continue;
        for (std::size_t bits = 0; bits < acc.size(); ++bits) {
            if (!acc[bits].is_zero()) out.add_term(Word(d, bits), acc[bits]);
        }
    }
    return out;
}

NCSeries to_assoc(const LieSeries& a) { return to_assoc(a.total(), a.truncation()); }

// ---------------------------------------------------------------------------
// Lyndon basis

bool is_lyndon(Word w) {
    if (w.empty()) return false;
    for (int k = 1; k < w.length(); ++k) {
        if (!Word::lex_less(w, w.suffix_from(k))) return false;
    }
    return true;
}

std::vector<Word> lyndon_words(int degree) {
    if (degree < 1) throw std::invalid_argument("lyndon_words: degree must be >= 1");
    if (degree > Word::kMaxLength) throw std::invalid_argument("lyndon_words: degree too large");
    // Duval's generation of all Lyndon words of length <= degree, in lex order.
    std::vector<Word> out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        const std::size_t m = w.size();
        if (static_cast<int>(m) == degree) {
            std::uint64_t bits = 0;
            for (int letter : w) bits = (bits << 1) | static_cast<std::uint64_t>(letter);
            out.emplace_back(degree, bits);
        }
        while (static_cast<int>(w.size()) < degree) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == 1) w.pop_back();
    }
    return out;
}

std::pair<Word, Word> standard_factorization(Word w) {
    if (w.length() < 2) throw std::invalid_argument("standard_factorization: word of length < 2");
    for (int k = 1; k < w.length(); ++k) {
        const Word v = w.suffix_from(k);
        if (is_lyndon(v)) return {w.prefix(k), v};
    }
    throw std::logic_error("standard_factorization: unreachable");
}

BracketTree standard_bracketing(Word w) {
    if (w.length() == 1) return BracketTree::generator(w.at(0));
    const auto [u, v] = standard_factorization(w);
    return BracketTree::bracket(standard_bracketing(u), standard_bracketing(v));
}

LyndonCoords to_lyndon_coords(const LieElement& a) {
    LyndonCoords out;
    for (auto& [d, acc] : dense_components(a)) {
        LyndonCoords part = eliminate(acc, d);
        if (!all_zero(acc)) throw std::logic_error("to_lyndon_coords: input is not a Lie element");
        out.merge(part);
    }
    return out;
}

LyndonCoords to_lyndon_coords(const LieSeries& a) { return to_lyndon_coords(a.total()); }

LieElement from_lyndon_coords(const LyndonCoords& coords) {
    LieElement out;
    for (const auto& [w, c] : coords) {
        const DegreeBasis& basis = degree_basis(w.length());
        auto it = std::lower_bound(basis.words.begin(), basis.words.end(), w);
        if (it == basis.words.end() || *it != w) throw std::invalid_argument("from_lyndon_coords: not a Lyndon word: " + w.to_string());
        out.add_term(basis.trees[static_cast<std::size_t>(it - basis.words.begin())], c);
    }
    return out;
}

LieSeries normalized(const LieSeries& s) {
    return LieSeries(from_lyndon_coords(to_lyndon_coords(s)), s.truncation());
}

std::optional<LyndonCoords> extract_lie(const NCSeries& a, int degree) {
    if (degree < 1) {
        if (a.constant_term().is_zero()) return LyndonCoords{};
        return std::nullopt;
    }
    DenseComponent acc(std::size_t{1} << degree);
    const NCSeries part = a.component(degree);
    for (const auto& [w, c] : part.terms()) acc[w.bits()] = c;
    LyndonCoords coords = eliminate(acc, degree);
    if (!all_zero(acc)) return std::nullopt;
    return coords;
}

// ---------------------------------------------------------------------------
// Derivations

namespace {

LieElement derive(const Derivation& d, const BracketTree& t, int truncation) {
    if (t.is_leaf()) {
        const LieSeries& img = t.letter() == Letter::X ? d.image_x : d.image_y;
        LieElement out;
        for (const auto& [deg, e] : img.graded()) {
            if (deg <= truncation) out += e;
        }
        return out;
    }
    const BracketTree& a = t.left();
    const BracketTree& b = t.right();
    LieElement out;
    const LieElement da = derive(d, a, truncation - b.degree());
    for (const auto& [ta, ca] : da.terms()) out.add_term(BracketTree::bracket(ta, b), ca);
    const LieElement db = derive(d, b, truncation - a.degree());
    for (const auto& [tb, cb] : db.terms()) out.add_term(BracketTree::bracket(a, tb), cb);
    return out;
}

}  // namespace

LieElement apply_derivation(const Derivation& d, const LieElement& target, int truncation) {
    LieElement out;
    for (const auto& [t, c] : target.terms()) out += derive(d, t, truncation) * c;
    return out;
}

LieSeries apply_derivation(const Derivation& d, const LieSeries& target, int truncation) {
    return LieSeries(apply_derivation(d, target.total(), truncation), truncation);
}

// ---------------------------------------------------------------------------
// Ideal membership

namespace {

SparseVector coords_vector(const LieElement& e) {
    SparseVector v;
    for (const auto& [w, c] : to_lyndon_coords(e)) v.emplace(w.bits(), c);
    return v;
}

}  // namespace

bool ideal_membership(const LieElement& a, LieIdeal ideal) {
    if (a.is_zero()) return true;
    const auto degree = a.homogeneous_degree();
    if (!degree) throw std::invalid_argument("ideal_membership: element is not homogeneous");
    const int d = *degree;
    const SparseVector target = coords_vector(a);
    if (target.empty()) return true;

    RowEchelon span;
    auto basis_elements = [](int deg) {
        std::vector<LieElement> out;
        for (const BracketTree& t : degree_basis(deg).trees) out.push_back(LieElement::from_tree(t));
        return out;
    };
    if (ideal == LieIdeal::metabelian) {
        for (int du = 2; du + 2 <= d; ++du) {
            for (const auto& u : basis_elements(du)) {
                for (const auto& v : basis_elements(d - du)) span.insert(coords_vector(bracket(u, v)));
            }
        }
    } else {
        for (int du = 2; du + 4 <= d; ++du) {
            for (int dv = 2; du + dv + 2 <= d; ++dv) {
                const int dw = d - du - dv;
                for (const auto& v : basis_elements(dv)) {
                    for (const auto& w : basis_elements(dw)) {
                        const LieElement vw = bracket(v, w);
                        for (const auto& u : basis_elements(du)) span.insert(coords_vector(bracket(u, vw)));
                    }
                }
            }
        }
    }
    return span.in_span(target);
}

}  // namespace mbch
