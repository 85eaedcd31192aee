#include "mbch/series.hpp"

#include "mbch/errors.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <vector>

namespace mbch {

// ---------------------------------------------------------------------------
// Bernoulli numbers

namespace {

std::mutex& bernoulli_mutex() {
    static std::mutex m;
    return m;
}

std::vector<Rational>& bernoulli_cache() {
    static std::vector<Rational> cache{Rational(1)};
    return cache;
}

}  // namespace

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    std::lock_guard lock(bernoulli_mutex());
    auto& cache = bernoulli_cache();
    while (static_cast<int>(cache.size()) <= n) {
        // sum_{k=1}^{m} C(m+1,k) B_k = -1 solved for B_m, with m = cache.size().
        const long m = static_cast<long>(cache.size());
        Rational rhs(-1);
        for (long k = 1; k < m; ++k) {
            rhs -= Rational(binomial(m + 1, k)) * cache[static_cast<std::size_t>(k)];
        }
        rhs /= Rational(binomial(m + 1, m));
        cache.push_back(std::move(rhs));
    }
    return cache[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// Dense helpers: a triangular array indexed by (i, j) with i + j <= n.

namespace {

struct Dense {
    int n;
    std::vector<Rational> c;

    explicit Dense(int trunc) : n(trunc), c(trunc < 0 ? 0 : static_cast<std::size_t>((trunc + 1) * (trunc + 2) / 2)) {}

    static std::size_t index(int i, int j) {
        const int d = i + j;
        return static_cast<std::size_t>(d * (d + 1) / 2 + i);
    }
    Rational& at(int i, int j) { return c[index(i, j)]; }
    const Rational& at(int i, int j) const { return c[index(i, j)]; }

    static Dense from(const BiSeries& s, int trunc) {
        Dense d(trunc);
        for (const auto& [e, v] : s.terms()) {
            if (e.degree() <= trunc) d.at(e.i, e.j) = v;
        }
        return d;
    }

    BiSeries to_series() const {
        BiSeries out(n);
        for (int deg = 0; deg <= n; ++deg) {
            for (int i = 0; i <= deg; ++i) {
                const auto& v = at(i, deg - i);
                if (!v.is_zero()) out.add_term(i, deg - i, v);
            }
        }
        return out;
    }
};

/// Homogeneous polynomial of degree d stored as coefficients of x^i y^(d-i).
using Homogeneous = std::vector<Rational>;

Homogeneous homogeneous(const Dense& s, int d) {
    Homogeneous h(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) h[static_cast<std::size_t>(i)] = s.at(i, d - i);
    return h;
}

void add_product(Homogeneous& acc, const Homogeneous& a, const Homogeneous& b, const Rational& scale) {
    for (std::size_t p = 0; p < a.size(); ++p) {
        if (a[p].is_zero()) continue;
        const Rational ap = a[p] * scale;
        for (std::size_t q = 0; q < b.size(); ++q) {
            if (!b[q].is_zero()) acc[p + q].add_product(ap, b[q]);
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// BiSeries

BiSeries::BiSeries(int truncation) : truncation_(truncation) {
    if (truncation < 0) throw std::invalid_argument("BiSeries: negative truncation");
}

BiSeries BiSeries::constant(const Rational& c, int truncation) {
    return monomial(0, 0, c, truncation);
}

BiSeries BiSeries::monomial(int i, int j, const Rational& c, int truncation) {
    BiSeries s(truncation);
    s.add_term(i, j, c);
    return s;
}

Rational BiSeries::coeff(int i, int j) const {
    auto it = terms_.find(Exponent{i, j});
    return it == terms_.end() ? Rational() : it->second;
}

int BiSeries::lowest_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
int BiSeries::highest_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

BiSeries BiSeries::truncated(int n) const {
    BiSeries out(std::min(n, truncation_));
    for (const auto& [e, v] : terms_) {
        if (e.degree() > out.truncation_) break;
        out.terms_.emplace(e, v);
    }
    return out;
}

BiSeries BiSeries::homogeneous_part(int d) const {
    BiSeries out(truncation_);
    for (const auto& [e, v] : terms_) {
        if (e.degree() == d) out.terms_.emplace(e, v);
    }
    return out;
}

void BiSeries::add_term(int i, int j, const Rational& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("BiSeries: negative exponent");
    if (i + j > truncation_ || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Exponent{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    if (o.truncation_ < truncation_) *this = truncated(o.truncation_);
    for (const auto& [e, v] : o.terms_) add_term(e.i, e.j, v);
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
    if (o.truncation_ < truncation_) *this = truncated(o.truncation_);
    for (const auto& [e, v] : o.terms_) add_term(e.i, e.j, -v);
    return *this;
}

BiSeries& BiSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    const int n = std::min(a.truncation(), b.truncation());
    Dense acc(n);
    for (const auto& [ea, va] : a.terms()) {
        if (ea.degree() > n) break;
        for (const auto& [eb, vb] : b.terms()) {
            if (ea.degree() + eb.degree() > n) break;
            acc.at(ea.i + eb.i, ea.j + eb.j).add_product(va, vb);
        }
    }
    return acc.to_series();
}

bool BiSeries::equal_through(const BiSeries& o, int n) const {
    auto lhs = truncated(n).terms_;
    auto rhs = o.truncated(n).terms_;
    return lhs == rhs;
}

std::string BiSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : terms_) {
        Rational mag = v.sign() < 0 ? -v : v;
        if (first) {
            if (v.sign() < 0) os << "-";
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        auto power = [&](char var, int p) {
            if (p == 0) return;
            if (!mono.empty()) mono += "*";
            mono += var;
            if (p > 1) mono += "^" + std::to_string(p);
        };
        power('x', e.i);
        power('y', e.j);
        if (mono.empty()) {
            os << mag;
        } else if (mag == Rational(1)) {
            os << mono;
        } else {
            os << mag << "*" << mono;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Operations

BiSeries bs_add(const BiSeries& a, const BiSeries& b) { return a + b; }
BiSeries bs_mul(const BiSeries& a, const BiSeries& b) { return a * b; }

BiSeries bs_inverse(const BiSeries& a) {
    const Rational a0 = a.constant_term();
    if (a0.is_zero()) throw DomainError("non-unit series");
    const int n = a.truncation();
    const Rational inv0 = Rational(1) / a0;
    Dense b(n);
    b.at(0, 0) = inv0;
    for (int d = 1; d <= n; ++d) {
        for (int i = 0; i <= d; ++i) {
            const int j = d - i;
            Rational acc;
            for (const auto& [e, v] : a.terms()) {
                if (e.degree() == 0) continue;
                if (e.degree() > d) break;
                if (e.i <= i && e.j <= j) acc.add_product(v, b.at(i - e.i, j - e.j));
            }
            b.at(i, j) = -(acc * inv0);
        }
    }
    return b.to_series();
}

BiSeries bs_divide_exact(const BiSeries& a, const BiSeries& d) {
    if (d.is_zero()) throw DomainError("division by zero series");
    const int m = d.lowest_degree();
    const int avail = std::min(a.truncation(), d.truncation());
    // Components of a below the divisor's lowest degree must vanish.
    for (const auto& [e, v] : a.terms()) {
        if (e.degree() >= m || e.degree() > avail) break;
        throw InexactDivision();
    }
    const int n = avail - m;
    if (n < 0) return BiSeries(0);

    const Dense da = Dense::from(a, avail);
    const Dense dd = Dense::from(d, avail);
    const Homogeneous lead = homogeneous(dd, m);
    std::size_t p0 = 0;
    while (lead[p0].is_zero()) ++p0;
    const Rational inv_lead = Rational(1) / lead[p0];

    std::vector<Homogeneous> q;
    q.reserve(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        Homogeneous r = homogeneous(da, k + m);
        for (int j = 1; j <= k; ++j) {
            add_product(r, homogeneous(dd, m + j), q[static_cast<std::size_t>(k - j)], Rational(-1));
        }
        // Solve lead * qk = r by forward elimination on the x-exponent.
        Homogeneous qk(static_cast<std::size_t>(k + 1));
        for (std::size_t i = 0; i < qk.size(); ++i) {
            Rational acc = r[i + p0];
            for (std::size_t t = 1; t <= i && p0 + t < lead.size(); ++t) {
                acc.add_product(lead[p0 + t], -qk[i - t]);
            }
            qk[i] = acc * inv_lead;
        }
        Homogeneous check(r.size());
        add_product(check, lead, qk, Rational(1));
        if (check != r) throw InexactDivision();
        q.push_back(std::move(qk));
    }

    BiSeries out(n);
    for (int k = 0; k <= n; ++k) {
        for (int i = 0; i <= k; ++i) out.add_term(i, k - i, q[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
    }
    return out;
}

BiSeries bs_subst_negswap(const BiSeries& a) {
    BiSeries out(a.truncation());
    for (const auto& [e, v] : a.terms()) out.add_term(e.j, e.i, e.degree() % 2 == 0 ? v : -v);
    return out;
}

BiSeries bs_scale(const BiSeries& a, int sx, int sy) {
    BiSeries out(a.truncation());
    for (const auto& [e, v] : a.terms()) {
        mpz_class f;
        mpz_class px;
        mpz_class py;
        mpz_pow_ui(px.get_mpz_t(), mpz_class(sx).get_mpz_t(), static_cast<unsigned long>(e.i));
        mpz_pow_ui(py.get_mpz_t(), mpz_class(sy).get_mpz_t(), static_cast<unsigned long>(e.j));
        f = px * py;
        out.add_term(e.i, e.j, v * Rational(f));
    }
    return out;
}

BiSeries bs_swap(const BiSeries& a) {
    BiSeries out(a.truncation());
    for (const auto& [e, v] : a.terms()) out.add_term(e.j, e.i, v);
    return out;
}

ParityParts bs_parity_split(const BiSeries& a) {
    ParityParts parts{BiSeries(a.truncation()), BiSeries(a.truncation())};
    for (const auto& [e, v] : a.terms()) {
        (e.degree() % 2 == 0 ? parts.even : parts.odd).add_term(e.i, e.j, v);
    }
    return parts;
}

Rational named_coefficient(NamedSeries name, int n) {
    switch (name) {
        case NamedSeries::expm1_over_t:
            return Rational(1) / Rational(factorial(static_cast<unsigned long>(n + 1)));
        case NamedSeries::t_over_expm1:
            return bernoulli(n) / Rational(factorial(static_cast<unsigned long>(n)));
        case NamedSeries::exp:
            return Rational(1) / Rational(factorial(static_cast<unsigned long>(n)));
        case NamedSeries::expm1:
            return n == 0 ? Rational(0) : Rational(1) / Rational(factorial(static_cast<unsigned long>(n)));
        case NamedSeries::log1p:
            return n == 0 ? Rational(0) : sign_power(n - 1) / Rational(static_cast<long>(n));
    }
    return Rational(0);
}

BiSeries bs_named(NamedSeries name, LinearForm arg, int truncation) {
    BiSeries out(truncation);
    for (int n = 0; n <= truncation; ++n) {
        const Rational an = named_coefficient(name, n);
        if (an.is_zero()) continue;
        for (int i = 0; i <= n; ++i) {
            mpz_class px;
            mpz_class py;
            mpz_pow_ui(px.get_mpz_t(), mpz_class(arg.cx).get_mpz_t(), static_cast<unsigned long>(i));
            mpz_pow_ui(py.get_mpz_t(), mpz_class(arg.cy).get_mpz_t(), static_cast<unsigned long>(n - i));
            out.add_term(i, n - i, an * Rational(mpz_class(binomial(n, i) * px * py)));
        }
    }
    return out;
}

}  // namespace mbch
