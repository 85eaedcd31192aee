#include "mbch/metabelian.hpp"

#include "mbch/errors.hpp"

#include <sstream>
#include <vector>

namespace mbch {

namespace {

std::string letters_with_powers(const std::string& letters) {
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

/// Word X^k Y^l X Y.
Word basis_word(int k, int l) {
    return Word(k + l + 2, (((std::uint64_t{1} << l) - 1) << 2) | 1U);
}

}  // namespace

// ---------------------------------------------------------------------------
// MetabelianElement

MetabelianElement::MetabelianElement(int truncation) : truncation_(truncation) {
    if (truncation < 1) throw std::invalid_argument("MetabelianElement: truncation must be >= 1");
}

MetabelianElement::MetabelianElement(int truncation, Rational a, Rational b, const BiSeries& f)
    : MetabelianElement(truncation) {
    a_ = std::move(a);
    b_ = std::move(b);
    for (const auto& [e, c] : f.terms()) add_term(e.i, e.j, c);
}

Rational MetabelianElement::coeff(int k, int l) const {
    auto it = table_.find(Exponent{k, l});
    return it == table_.end() ? Rational() : it->second;
}

BiSeries MetabelianElement::operator_series() const {
    BiSeries f(truncation_ >= 2 ? truncation_ - 2 : 0);
    for (const auto& [e, c] : table_) f.add_term(e.i, e.j, c);
    return f;
}

MetabelianElement MetabelianElement::degree_part(int n) const {
    MetabelianElement out(truncation_);
    if (n == 1) {
        out.a_ = a_;
        out.b_ = b_;
    }
    for (const auto& [e, c] : table_) {
        if (e.degree() + 2 == n) out.table_.emplace(e, c);
    }
    return out;
}

MetabelianElement MetabelianElement::truncated(int n) const {
    MetabelianElement out(std::min(n, truncation_));
    out.a_ = a_;
    out.b_ = b_;
    for (const auto& [e, c] : table_) out.add_term(e.i, e.j, c);
    return out;
}

LieElement MetabelianElement::to_lie() const {
    LieElement out = LieElement::generator(Letter::X) * a_ + LieElement::generator(Letter::Y) * b_;
    for (const auto& [e, c] : table_) out += long_commutator(basis_word(e.i, e.j)) * c;
    return out;
}

void MetabelianElement::add_term(int k, int l, const Rational& c) {
    if (k < 0 || l < 0) throw std::invalid_argument("MetabelianElement: negative index");
    if (k + l + 2 > truncation_ || c.is_zero()) return;
    auto [it, inserted] = table_.try_emplace(Exponent{k, l}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) table_.erase(it);
    }
}

MetabelianElement& MetabelianElement::operator+=(const MetabelianElement& o) {
    if (o.truncation_ < truncation_) *this = truncated(o.truncation_);
    a_ += o.a_;
    b_ += o.b_;
    for (const auto& [e, c] : o.table_) add_term(e.i, e.j, c);
    return *this;
}

MetabelianElement& MetabelianElement::operator-=(const MetabelianElement& o) {
    if (o.truncation_ < truncation_) *this = truncated(o.truncation_);
    a_ -= o.a_;
    b_ -= o.b_;
    for (const auto& [e, c] : o.table_) add_term(e.i, e.j, -c);
    return *this;
}

MetabelianElement& MetabelianElement::operator*=(const Rational& c) {
    a_ *= c;
    b_ *= c;
    if (c.is_zero()) {
        table_.clear();
        return *this;
    }
    for (auto& [e, v] : table_) v *= c;
    return *this;
}

std::string MetabelianElement::to_string() const {
    std::vector<std::pair<std::string, Rational>> parts;
    if (!a_.is_zero()) parts.emplace_back("X", a_);
    if (!b_.is_zero()) parts.emplace_back("Y", b_);
    for (const auto& [e, c] : table_) {
        const std::string letters = std::string(static_cast<std::size_t>(e.i), 'X') +
                                    std::string(static_cast<std::size_t>(e.j), 'Y') + "XY";
        parts.emplace_back("[" + letters_with_powers(letters) + "]", c);
    }
    if (parts.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& [name, c] = parts[k];
        if (k > 0) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rational mag = c.sign() < 0 ? -c : c;
        if (mag != Rational(1)) os << mag << " ";
        os << name;
    }
    return os.str();
}

MetabelianElement ad_x(const MetabelianElement& e) {
    MetabelianElement out(e.truncation());
    out.add_term(0, 0, e.y_coeff());
    for (const auto& [ex, c] : e.table()) out.add_term(ex.i + 1, ex.j, c);
    return out;
}

MetabelianElement ad_y(const MetabelianElement& e) {
    MetabelianElement out(e.truncation());
    out.add_term(0, 0, -e.x_coeff());
    for (const auto& [ex, c] : e.table()) out.add_term(ex.i, ex.j + 1, c);
    return out;
}

MetabelianElement metabelian_negswap(const MetabelianElement& e) {
    // X -> -Y, Y -> -X; x^k y^l [XY] -> (-y)^k (-x)^l [YX] = -(-1)^(k+l) B(l,k).
    MetabelianElement out(e.truncation());
    out.set_x(-e.y_coeff());
    out.set_y(-e.x_coeff());
    for (const auto& [ex, c] : e.table()) {
        out.add_term(ex.j, ex.i, ex.degree() % 2 == 0 ? -c : c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Projection onto the metabelian basis

namespace {

using RightNormed = std::map<Word, std::int64_t>;

void accumulate(RightNormed& acc, Word w, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = acc.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

/// ad A applied to a combination of right-normed words, via
/// [[A1,A2],W] = [A1,[A2,W]] - [A2,[A1,W]].
RightNormed ad_tree(const BracketTree& a, const RightNormed& combo) {
    RightNormed out;
    if (a.is_leaf()) {
        const Word l = Word::letter(a.letter());
        for (const auto& [w, c] : combo) accumulate(out, l + w, c);
        return out;
    }
    for (const auto& [w, c] : ad_tree(a.left(), ad_tree(a.right(), combo))) accumulate(out, w, c);
    for (const auto& [w, c] : ad_tree(a.right(), ad_tree(a.left(), combo))) accumulate(out, w, -c);
    return out;
}

RightNormed right_normed(const BracketTree& t) {
    if (t.is_leaf()) return RightNormed{{Word::letter(t.letter()), 1}};
    return ad_tree(t.left(), right_normed(t.right()));
}

}  // namespace

MetabelianElement project(const LieElement& e, int truncation) {
    MetabelianElement out(truncation);
    for (const auto& [tree, coeff] : e.terms()) {
        if (tree.degree() > truncation) continue;
        for (const auto& [w, c] : right_normed(tree)) {
            const int n = w.length();
            const Rational value = coeff * Rational(static_cast<long>(c));
            if (n == 1) {
                if (w.at(0) == Letter::X) out.set_x(out.x_coeff() + value);
                else out.set_y(out.y_coeff() + value);
                continue;
            }
            const Letter last = w.at(n - 1);
            const Letter before = w.at(n - 2);
            if (last == before) continue;
            const Word prefix = w.prefix(n - 2);
            const int l = prefix.count(Letter::Y);
            const int k = prefix.length() - l;
            out.add_term(k, l, before == Letter::X ? value : -value);
        }
    }
    return out;
}

MetabelianElement project(const LieSeries& e) { return project(e.total(), e.truncation()); }

// ---------------------------------------------------------------------------
// Closed formulas

BiSeries h_series(int truncation) {
    if (truncation < 0) throw std::invalid_argument("h_series: negative truncation");
    const int n = truncation + 1;
    const BiSeries ex = bs_named(NamedSeries::expm1_over_t, linear::x, n);
    const BiSeries t_sum = bs_inverse(bs_named(NamedSeries::expm1_over_t, linear::x_plus_y, n));
    const BiSeries numerator = BiSeries::constant(1, n) - ex * t_sum;
    return bs_divide_exact(numerator, BiSeries::y(n));
}

MetabelianElement hausdorff_closed(int truncation) {
    if (truncation < 1) throw std::invalid_argument("hausdorff_closed: truncation must be >= 1");
    MetabelianElement out(truncation);
    out.set_x(1);
    out.set_y(1);
    if (truncation >= 2) out += MetabelianElement(truncation, 0, 0, h_series(truncation - 2));
    return out;
}

BiSeries goldberg_c(int truncation) {
    if (truncation < 2) throw std::invalid_argument("goldberg_c: truncation must be >= 2");
    const int n = truncation + 1;
    const BiSeries x = BiSeries::x(n);
    const BiSeries y = BiSeries::y(n);
    const BiSeries ex = bs_named(NamedSeries::exp, linear::x, n);
    const BiSeries ey = bs_named(NamedSeries::exp, linear::y, n);
    const BiSeries exm1 = bs_named(NamedSeries::expm1, linear::x, n);
    const BiSeries eym1 = bs_named(NamedSeries::expm1, linear::y, n);
    const BiSeries x_minus_y = x - y;
    // e^x - e^y = (x - y) * unit with unit(0,0) = 1.
    const BiSeries unit = bs_divide_exact(ex - ey, x_minus_y);
    const BiSeries numerator = x * ex * eym1 - y * ey * exm1;
    return bs_divide_exact(bs_divide_exact(numerator, x_minus_y), unit);
}

BiSeries zassenhaus_operator(int truncation) {
    if (truncation < 0) throw std::invalid_argument("zassenhaus_operator: negative truncation");
    const int n = truncation + 1;
    // (e^{-t}-1)/t = -expm1_over_t(-t);  y/(e^y-1) = 1/expm1_over_t(y).
    const BiSeries em_x = bs_named(NamedSeries::expm1_over_t, linear::neg_x, n);
    const BiSeries em_y = bs_named(NamedSeries::expm1_over_t, linear::neg_y, n);
    const BiSeries ty = bs_inverse(bs_named(NamedSeries::expm1_over_t, linear::y, n));
    const BiSeries inner = BiSeries::constant(1, n) - em_x * ty;
    const BiSeries product = -(em_y * inner);
    return bs_divide_exact(product, BiSeries::x(n) + BiSeries::y(n));
}

MetabelianElement zassenhaus_closed(int truncation) {
    if (truncation < 2) throw std::invalid_argument("zassenhaus_closed: truncation must be >= 2");
    return MetabelianElement(truncation, 0, 0, zassenhaus_operator(truncation - 2));
}

std::map<int, MetabelianElement> zassenhaus_components(int truncation) {
    const MetabelianElement total = zassenhaus_closed(truncation);
    std::map<int, MetabelianElement> out;
    for (int n = 2; n <= truncation; ++n) out.emplace(n, total.degree_part(n));
    return out;
}

BiSeries kv_f_series(int truncation, const BiSeries& g) {
    if (truncation < 0) throw std::invalid_argument("kv_f_series: negative truncation");
    if (!(bs_subst_negswap(g) == -g)) throw DomainError("g violates antisymmetry");
    const int n = truncation + 1;
    const BiSeries h = h_series(n);
    const ParityParts parts = bs_parity_split(h);
    const BiSeries even_f = bs_divide_exact(parts.odd, BiSeries::x(n) - BiSeries::y(n));
    const BiSeries odd_f = bs_divide_exact(parts.even - BiSeries::constant(Rational(1, 2), n), BiSeries::x(n) * Rational(2));
    BiSeries yg(truncation);
    for (const auto& [e, c] : g.terms()) yg.add_term(e.i, e.j + 1, c);
    return even_f + odd_f + yg;
}

MetabelianElement kv_solve(int truncation, const Rational& a, const BiSeries& g) {
    if (truncation < 2) throw std::invalid_argument("kv_solve: truncation must be >= 2");
    return MetabelianElement(truncation, a, Rational(1, 4), kv_f_series(truncation - 2, g));
}

MetabelianElement kv_solve(int truncation) { return kv_solve(truncation, 0, BiSeries(0)); }

MetabelianElement kv_residual(const MetabelianElement& f, int truncation) {
    const int n = std::min(truncation, f.truncation() + 1);
    const MetabelianElement lifted(n + 1, f.x_coeff(), f.y_coeff(), f.operator_series());
    MetabelianElement lhs = ad_x(lifted) + ad_y(metabelian_negswap(lifted));
    MetabelianElement rhs = hausdorff_closed(n);
    rhs.set_x(0);
    rhs.set_y(0);
    return lhs.truncated(n) - rhs;
}

bool kv_verify(const MetabelianElement& f, int truncation) {
    const MetabelianElement r = kv_residual(f, truncation);
    return r.x_coeff().is_zero() && r.y_coeff().is_zero() && r.table().empty();
}

}  // namespace mbch
