#include "mbch/tilde.hpp"

#include "mbch/series.hpp"

#include <sstream>
#include <stdexcept>

namespace mbch {

bool pair_in_basis_order(const LongIndex& a, const LongIndex& b) {
    return a.m > b.m || (a.m == b.m && a.n > b.n);
}

TildeElement::TildeElement(int truncation) : truncation_(truncation) {
    if (truncation < 1) throw std::invalid_argument("TildeElement: truncation must be >= 1");
}

TildeElement TildeElement::long_commutator(LongIndex i, int truncation, const Rational& c) {
    TildeElement e(truncation);
    e.add_linear(i, c);
    return e;
}

Rational TildeElement::linear_coeff(int m, int n) const {
    auto it = linear_.find(LongIndex{m, n});
    return it == linear_.end() ? Rational() : it->second;
}

Rational TildeElement::quadratic_coeff(LongIndex a, LongIndex b) const {
    if (a == b) return {};
    const bool ordered = pair_in_basis_order(a, b);
    auto it = quadratic_.find(ordered ? PairIndex{a, b} : PairIndex{b, a});
    if (it == quadratic_.end()) return {};
    return ordered ? it->second : -it->second;
}

void TildeElement::add_linear(LongIndex i, const Rational& c) {
    if (i.m < 0 || i.n < 0) throw std::invalid_argument("TildeElement: negative index");
    if (i.degree() > truncation_ || c.is_zero()) return;
    auto [it, inserted] = linear_.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) linear_.erase(it);
    }
}

void TildeElement::add_pair(LongIndex a, LongIndex b, const Rational& c) {
    if (a.m < 0 || a.n < 0 || b.m < 0 || b.n < 0) throw std::invalid_argument("TildeElement: negative index");
    if (a == b || c.is_zero() || a.degree() + b.degree() > truncation_) return;
    const bool ordered = pair_in_basis_order(a, b);
    const PairIndex key = ordered ? PairIndex{a, b} : PairIndex{b, a};
    const Rational v = ordered ? c : -c;
    auto [it, inserted] = quadratic_.try_emplace(key, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) quadratic_.erase(it);
    }
}

TildeElement& TildeElement::operator+=(const TildeElement& o) {
    if (o.truncation_ < truncation_) {
        TildeElement cut(o.truncation_);
        cut.a_ = a_;
        cut.b_ = b_;
        for (const auto& [i, c] : linear_) cut.add_linear(i, c);
        for (const auto& [p, c] : quadratic_) cut.add_pair(p.first, p.second, c);
        *this = std::move(cut);
    }
    a_ += o.a_;
    b_ += o.b_;
    for (const auto& [i, c] : o.linear_) add_linear(i, c);
    for (const auto& [p, c] : o.quadratic_) add_pair(p.first, p.second, c);
    return *this;
}

TildeElement& TildeElement::operator-=(const TildeElement& o) { return *this += o * Rational(-1); }

TildeElement& TildeElement::operator*=(const Rational& c) {
    a_ *= c;
    b_ *= c;
    if (c.is_zero()) {
        linear_.clear();
        quadratic_.clear();
        return *this;
    }
    for (auto& [i, v] : linear_) v *= c;
    for (auto& [p, v] : quadratic_) v *= c;
    return *this;
}

std::string TildeElement::to_string() const {
    std::vector<std::pair<std::string, Rational>> parts;
    if (!a_.is_zero()) parts.emplace_back("X", a_);
    if (!b_.is_zero()) parts.emplace_back("Y", b_);
    auto name = [](const LongIndex& i) { return "{" + std::to_string(i.m) + "," + std::to_string(i.n) + "}"; };
    for (const auto& [i, c] : linear_) parts.emplace_back(name(i), c);
    for (const auto& [p, c] : quadratic_) parts.emplace_back("[" + name(p.first) + "," + name(p.second) + "]", c);
    if (parts.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& [label, c] = parts[k];
        if (k > 0) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rational mag = c.sign() < 0 ? -c : c;
        if (mag != Rational(1)) os << mag << " ";
        os << label;
    }
    return os.str();
}

TildeElement tilde_normalize(const std::vector<RawPair>& pairs, int truncation) {
    TildeElement out(truncation);
    for (const auto& p : pairs) out.add_pair(p.a, p.b, p.c);
    return out;
}

namespace {

/// Linear part of gen acting on {m,n}, plus its quadratic part added to `out`.
void act_on_long(Letter gen, LongIndex i, const Rational& c, TildeElement& out) {
    if (gen == Letter::X) {
        out.add_linear(LongIndex{i.m + 1, i.n}, c);
        return;
    }
    out.add_linear(LongIndex{i.m, i.n + 1}, c);
    for (int k = 1; k <= i.m; ++k) {
        out.add_pair(LongIndex{k - 1, 0}, LongIndex{i.m - k, i.n}, c * Rational(binomial(i.m, k)));
    }
}

/// Linear part only of gen acting on {m,n}.
LongIndex act_linear(Letter gen, LongIndex i) {
    return gen == Letter::X ? LongIndex{i.m + 1, i.n} : LongIndex{i.m, i.n + 1};
}

}  // namespace

TildeElement tilde_act(Letter gen, const TildeElement& e) {
    TildeElement out(e.truncation());
    // [X,Y] = -{0,0}; [Y,X] = {0,0}.
    if (gen == Letter::X) out.add_linear(LongIndex{0, 0}, -e.y_coeff());
    else out.add_linear(LongIndex{0, 0}, e.x_coeff());
    for (const auto& [i, c] : e.linear()) act_on_long(gen, i, c, out);
    for (const auto& [p, c] : e.quadratic()) {
        out.add_pair(act_linear(gen, p.first), p.second, c);
        out.add_pair(p.first, act_linear(gen, p.second), c);
    }
    return out;
}

namespace {

Rational bernoulli_weight(int l) { return bernoulli(l) / Rational(factorial(static_cast<unsigned long>(l))); }

TildeElement apply_powers(int xs, int ys, TildeElement e) {
    for (int k = 0; k < ys && !e.is_zero(); ++k) e = tilde_act(Letter::Y, e);
    for (int k = 0; k < xs && !e.is_zero(); ++k) e = tilde_act(Letter::X, e);
    return e;
}

class DyEvaluator {
public:
    explicit DyEvaluator(int truncation) : n_(truncation) {}

    /// D_Y{m,n}, truncated.
    const TildeElement& on_long(LongIndex i) {
        auto it = cache_.find(i);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(i, compute(i)).first->second;
    }

    TildeElement apply(const TildeElement& e) {
        TildeElement out(n_);
        // D_Y(Y) = H_1 = X + sum_l (B_l/l!) {0,l-1}.
        if (!e.y_coeff().is_zero()) {
            out.add_x(e.y_coeff());
            for (int l = 1; l + 1 <= n_; ++l) out.add_linear(LongIndex{0, l - 1}, e.y_coeff() * bernoulli_weight(l));
        }
        for (const auto& [i, c] : e.linear()) out += on_long(i) * c;
        // Leibniz on [A,B]; quadratic parts of D_Y A, D_Y B land in [L',[L',L']].
        for (const auto& [p, c] : e.quadratic()) {
            if (p.degree() > n_) continue;
            for (const auto& [j, d] : on_long(p.first).linear()) out.add_pair(j, p.second, c * d);
            for (const auto& [j, d] : on_long(p.second).linear()) out.add_pair(p.first, j, c * d);
        }
        return out;
    }

private:
    TildeElement compute(LongIndex i) {
        TildeElement out(n_);
        if (i.degree() > n_) return out;
        if (i.n == 0) {
            for (int l = 1; i.m + l + 1 <= n_; ++l) out.add_linear(LongIndex{i.m + 1, l - 1}, -bernoulli_weight(l));
            return out;
        }
        // -x^m y^n sum_l (B_l/l!) {1,l-1}
        TildeElement head(n_);
        for (int l = 1; l + 2 <= n_; ++l) head.add_linear(LongIndex{1, l - 1}, -bernoulli_weight(l));
        out += apply_powers(i.m, i.n, head);
        // x^m sum_{k=0}^{n-1} y^k ({1,n-k-1} + sum_l (B_l/l!) [{0,l-1},{0,n-k-1}])
        for (int k = 0; k < i.n; ++k) {
            TildeElement inner(n_);
            const LongIndex tail{0, i.n - k - 1};
            inner.add_linear(LongIndex{1, i.n - k - 1}, 1);
            for (int l = 1; l + 1 + tail.degree() <= n_; ++l) inner.add_pair(LongIndex{0, l - 1}, tail, bernoulli_weight(l));
            out += apply_powers(i.m, k, inner);
        }
        return out;
    }

    int n_;
    std::map<LongIndex, TildeElement> cache_;
};

}  // namespace

TildeElement tilde_dy(const TildeElement& e, int truncation) {
    DyEvaluator dy(truncation);
    return dy.apply(e);
}

std::vector<TildeElement> hausdorff_tilde_terms(int truncation) {
    if (truncation < 1) throw std::invalid_argument("hausdorff_tilde: truncation must be >= 1");
    DyEvaluator dy(truncation);
    std::vector<TildeElement> terms;
    TildeElement h2(truncation);
    for (int k = 1; k + 1 <= truncation; ++k) h2 += dy.on_long(LongIndex{0, k - 1}) * bernoulli_weight(k);
    h2 *= Rational(1, 2);
    terms.push_back(std::move(h2));
    for (int m = 2; m <= truncation && !terms.back().is_zero(); ++m) {
        TildeElement next = dy.apply(terms.back());
        next *= Rational(1, m + 1);
        terms.push_back(std::move(next));
    }
    return terms;
}

TildeElement hausdorff_tilde(int truncation) {
    TildeElement out(truncation);
    out.add_x(1);
    out.add_y(1);
    for (int n = 1; n + 1 <= truncation; ++n) out.add_linear(LongIndex{0, n - 1}, bernoulli_weight(n));
    for (const auto& term : hausdorff_tilde_terms(truncation)) out += term;
    return out;
}

namespace {

LieElement expand_long(LongIndex i) {
    // X^m Y^(n+1) X
    const int len = i.m + i.n + 2;
    const std::uint64_t bits = ((std::uint64_t{1} << (i.n + 1)) - 1) << 1;
    return mbch::long_commutator(Word(len, bits));
}

}  // namespace

LieElement expand_to_free(const TildeElement& e) {
    LieElement out = LieElement::generator(Letter::X) * e.x_coeff() + LieElement::generator(Letter::Y) * e.y_coeff();
    for (const auto& [i, c] : e.linear()) out += expand_long(i) * c;
    for (const auto& [p, c] : e.quadratic()) out += bracket(expand_long(p.first), expand_long(p.second)) * c;
    return out;
}

}  // namespace mbch
