#include "mbch/bch.hpp"

#include "mbch/series.hpp"

#include <stdexcept>
#include <vector>

namespace mbch {

LieSeries hausdorff_h1(int truncation) {
    if (truncation < 1) throw std::invalid_argument("hausdorff_h1: truncation must be >= 1");
    LieElement h1 = LieElement::generator(Letter::X);
    for (int n = 1; n + 1 <= truncation; ++n) {
        const Rational c = bernoulli(n) / Rational(factorial(static_cast<unsigned long>(n)));
        if (c.is_zero()) continue;
        // [Y^n X] = Y...Y followed by X, right-nested.
        const Word w = Word(n + 1, ((std::uint64_t{1} << n) - 1) << 1);
        h1 += long_commutator(w) * c;
    }
    return LieSeries(h1, truncation);
}

Derivation derivation_dy(int truncation) {
    return Derivation{LieSeries(truncation), hausdorff_h1(truncation)};
}

std::vector<LieSeries> bch_recursive_terms(int truncation) {
    if (truncation < 1) throw std::invalid_argument("bch_recursive: truncation must be >= 1");
    const Derivation dy = derivation_dy(truncation);
    std::vector<LieSeries> terms;
    terms.emplace_back(LieElement::generator(Letter::Y), truncation);
    for (int m = 1; m <= truncation; ++m) {
        LieSeries next = apply_derivation(dy, terms.back(), truncation);
        next *= Rational(1, m);
        terms.push_back(normalized(next));
    }
    return terms;
}

LieSeries bch_recursive(int truncation) {
    LieSeries sum(truncation);
    for (const LieSeries& term : bch_recursive_terms(truncation)) sum += term;
    return normalized(sum);
}

namespace {

using Accumulator = std::vector<std::vector<__int128>>;  // [m][word bits]

struct DynkinEnumerator {
    int degree;
    std::uint64_t degree_factorial;
    Accumulator& sums;

    // Appends pairs (p, q) with p + q > 0 until the word reaches `degree`
    // letters; each complete tuple adds degree! / prod(p_i! q_i!).
    void extend(int used, std::uint64_t bits, int m, std::uint64_t denom) const {
        if (used == degree) {
            sums[static_cast<std::size_t>(m)][bits] += static_cast<__int128>(degree_factorial / denom);
            return;
        }
        const int remaining = degree - used;
        for (int s = 1; s <= remaining; ++s) {
            for (int p = s; p >= 0; --p) {
                const int q = s - p;
                const std::uint64_t next_bits = (bits << s) | ((std::uint64_t{1} << q) - 1);
                extend(used + s, next_bits, m + 1, denom * small_factorial(p) * small_factorial(q));
            }
        }
    }

    static std::uint64_t small_factorial(int n) {
        std::uint64_t f = 1;
        for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
        return f;
    }
};

Rational from_int128(__int128 v) {
    const bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class out = (hi << 64) + lo;
    if (negative) out = -out;
    return Rational(out);
}

}  // namespace

LieSeries bch_dynkin(int truncation) {
    if (truncation < 1) throw std::invalid_argument("bch_dynkin: truncation must be >= 1");
    if (truncation > 20) throw std::invalid_argument("bch_dynkin: truncation too large for tuple enumeration");
    LieElement total;
    for (int d = 1; d <= truncation; ++d) {
        Accumulator sums(static_cast<std::size_t>(d + 1), std::vector<__int128>(std::size_t{1} << d, 0));
        const DynkinEnumerator en{d, DynkinEnumerator::small_factorial(d), sums};
        en.extend(0, 0, 0, 1);
        const Rational scale = Rational(1) / Rational(mpz_class(factorial(static_cast<unsigned long>(d)) * d));
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
            Rational coeff;
            for (int m = 1; m <= d; ++m) {
                const __int128 s = sums[static_cast<std::size_t>(m)][bits];
                if (s == 0) continue;
                coeff += sign_power(m - 1) * from_int128(s) / Rational(static_cast<long>(m));
            }
            if (coeff.is_zero()) continue;
            total += long_commutator(Word(d, bits)) * (coeff * scale);
        }
    }
    return LieSeries(total, truncation);
}

}  // namespace mbch
