#pragma once

// Shared helpers for the test binaries: independent reference computations
// that avoid the library's own algorithms, and seeded random generators for
// the property tests.

#include "mbch/assoc.hpp"
#include "mbch/freelie.hpp"
#include "mbch/metabelian.hpp"
#include "mbch/series.hpp"

#include <random>
#include <vector>

namespace mbch::testing {

inline constexpr unsigned kSeed = 0x5eed2024U;
inline constexpr int kPropertyCases = 200;

/// B_0..B_n as the coefficients of t/(e^t - 1), obtained by long division of
/// 1 by (e^t - 1)/t = sum t^k/(k+1)!, then multiplying by k!.
inline std::vector<Rational> bernoulli_by_long_division(int n) {
    std::vector<Rational> d(n + 1);
    for (int k = 0; k <= n; ++k) d[k] = Rational(mpq_class(1, factorial(k + 1)));
    std::vector<Rational> q(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rational acc = k == 0 ? Rational(1) : Rational(0);
        for (int i = 1; i <= k; ++i) acc -= d[i] * q[k - i];
        q[k] = acc;  // d[0] == 1
    }
    for (int k = 0; k <= n; ++k) q[k] *= Rational(factorial(k));
    return q;
}

/// Number of Lyndon words of length d over two letters (Witt's formula).
inline long necklace_count(int d) {
    auto mobius = [](int m) {
        int result = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                result = -result;
            }
        }
        return m > 1 ? -result : result;
    };
    long total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e == 0) total += mobius(e) * (1L << (d / e));
    }
    return total / d;
}

/// Degree-2 part of ln(e^X e^Y) by writing out every Dynkin tuple
/// (p_1, q_1, ..., p_m, q_m) with sum 2 by hand.
inline NCSeries dynkin_degree_two_by_hand(int truncation = 2) {
    // m = 1: (2,0) -> [XX] = 0, (0,2) -> [YY] = 0, (1,1) -> 1/2 [XY].
    // m = 2, each p_i + q_i = 1: (1,0,1,0) and (0,1,0,1) vanish;
    //   (1,0,0,1) -> [XY] and (0,1,1,0) -> [YX], both with weight -1/4,
    //   so they cancel.
    // Total: 1/2 [XY] = 1/2 (XY - YX).
    NCSeries out(truncation);
    out.add_term(Word::from_string("XY"), Rational(1, 2));
    out.add_term(Word::from_string("YX"), Rational(-1, 2));
    return out;
}

/// Expansion of a single bracket tree, computed recursively without the
/// library's to_assoc.
inline std::map<Word, long> expand_tree(const BracketTree& t) {
    if (t.is_leaf()) return {{Word::letter(t.letter()), 1}};
    const auto a = expand_tree(t.left());
    const auto b = expand_tree(t.right());
    std::map<Word, long> out;
    for (const auto& [u, cu] : a) {
        for (const auto& [v, cv] : b) {
            out[u + v] += cu * cv;
            out[v + u] -= cu * cv;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

class Random {
public:
    explicit Random(unsigned seed = kSeed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational() {
        const int num = uniform(-9, 9);
        return Rational(num, uniform(1, 6));
    }

    BiSeries biseries(int truncation, int density = 2) {
        BiSeries s(truncation);
        for (int d = 0; d <= truncation; ++d) {
            for (int i = 0; i <= d; ++i) {
                if (uniform(0, density) == 0) s.add_term(i, d - i, rational());
            }
        }
        return s;
    }

    /// A unit: nonzero constant term.
    BiSeries unit_biseries(int truncation) {
        BiSeries s = biseries(truncation);
        s.add_term(0, 0, Rational(uniform(1, 5)) - s.constant_term());
        return s;
    }

    Word word(int length) {
        return Word(length, length == 0 ? 0 : std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << length) - 1)(rng_));
    }

    NCSeries nc_series(int truncation, bool constant = false) {
        NCSeries s(truncation);
        if (constant) s.add_term(Word(), rational());
        const int terms = uniform(1, 6);
        for (int k = 0; k < terms; ++k) s.add_term(word(uniform(1, truncation)), rational());
        return s;
    }

    BracketTree tree(int degree) {
        if (degree == 1) return BracketTree::generator(uniform(0, 1) == 0 ? Letter::X : Letter::Y);
        const int left = uniform(1, degree - 1);
        return BracketTree::bracket(tree(left), tree(degree - left));
    }

    LieElement lie_element(int degree, int terms = 3) {
        LieElement e;
        for (int k = 0; k < terms; ++k) e.add_term(tree(degree), rational());
        return e;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

/// p - p(-y,-x): every antisymmetric series arises this way (up to 1/2).
inline BiSeries antisymmetric(Random& r, int degree) {
    const BiSeries p = r.biseries(degree);
    return p - bs_subst_negswap(p);
}

}  // namespace mbch::testing
