#include "support.hpp"

#include "mbch/bch.hpp"
#include "mbch/errors.hpp"
#include "mbch/linalg.hpp"
#include "mbch/oracle.hpp"
#include "mbch/tilde.hpp"

#include <gtest/gtest.h>

using namespace mbch;
using mbch::testing::Random;

namespace {

Word w(const char* s) { return Word::from_string(s); }

MetabelianElement table(int n, std::initializer_list<std::tuple<int, int, Rational>> terms) {
    MetabelianElement e(n);
    for (const auto& [k, l, c] : terms) e.add_term(k, l, c);
    return e;
}

}  // namespace

// ---- Hausdorff series in the free Lie algebra --------------------------------

TEST(Hausdorff, DegreeFourDisplay) {
    const LyndonCoords expected{{w("X"), 1},
                                {w("Y"), 1},
                                {w("XY"), Rational(1, 2)},
                                {w("XXY"), Rational(1, 12)},
                                {w("XYY"), Rational(1, 12)},
                                {w("XXYY"), Rational(1, 24)}};
    EXPECT_EQ(to_lyndon_coords(bch_recursive(4)), expected);
}

TEST(Hausdorff, FirstTermOfRecursionIsX) {
    const auto terms = bch_recursive_terms(3);
    ASSERT_EQ(terms.size(), 4U);
    EXPECT_EQ(to_lyndon_coords(terms[0]), (LyndonCoords{{w("Y"), 1}}));
    // H_1 = D_Y(Y) = X - 1/2 [YX] + ... truncated at degree 3
    EXPECT_EQ(to_lyndon_coords(terms[1]), to_lyndon_coords(hausdorff_h1(3)));
}

TEST(Hausdorff, H1Coefficients) {
    const LyndonCoords h1 = to_lyndon_coords(hausdorff_h1(4));
    EXPECT_EQ(h1.at(w("X")), Rational(1));
    // -1/2 [YX] = 1/2 [XY]
    EXPECT_EQ(h1.at(w("XY")), Rational(1, 2));
    // (B_2/2!) [Y,[Y,X]] = 1/12 [[XY],Y]
    EXPECT_EQ(h1.at(w("XYY")), Rational(1, 12));
    EXPECT_EQ(h1.count(w("XYYY")), 0U);  // B_3 = 0
}

TEST(Hausdorff, MethodsAgreeWithOracle) {
    for (int n : {1, 2, 5, 8}) {
        const NCSeries oracle = bch_log_oracle(n);
        EXPECT_EQ(to_assoc(bch_recursive(n)), oracle) << n;
        EXPECT_EQ(to_assoc(bch_dynkin(n)), oracle) << n;
    }
}

TEST(Hausdorff, DynkinDegreeTwoByHand) {
    EXPECT_EQ(to_assoc(bch_dynkin(2)).component(2), mbch::testing::dynkin_degree_two_by_hand());
}

TEST(Hausdorff, OracleComponentsAreLie) {
    EXPECT_NO_THROW(lie_series_of(bch_log_oracle(7)));
}

TEST(Hausdorff, GoldbergSignRelation) {
    const NCSeries h = bch_log_oracle(7);
    for (int n = 1; n <= 7; ++n) {
        const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t bits = 0; bits <= mask; ++bits) {
            const Word a(n, bits), b(n, ~bits & mask);
            EXPECT_EQ(nc_coefficient(h, b), sign_power(n - 1) * nc_coefficient(h, a));
        }
    }
}

// ---- metabelian quotient ------------------------------------------------------------

TEST(Metabelian, DegreeFourTable) {
    const MetabelianElement h = hausdorff_closed(4);
    EXPECT_EQ(h.x_coeff(), Rational(1));
    EXPECT_EQ(h.y_coeff(), Rational(1));
    MetabelianElement expected = table(4, {{0, 0, Rational(1, 2)}, {1, 0, Rational(1, 12)}, {0, 1, Rational(-1, 12)}, {1, 1, Rational(-1, 24)}});
    expected.set_x(1);
    expected.set_y(1);
    EXPECT_EQ(h, expected);
    EXPECT_EQ(h.to_string(), "X + Y + 1/2 [XY] - 1/12 [YXY] + 1/12 [X^2Y] - 1/24 [XYXY]");
}

TEST(Metabelian, BasisElementsAreIndependent) {
    for (int d = 2; d <= 9; ++d) {
        RowEchelon rows;
        for (int k = 0; k + 2 <= d; ++k) {
            const NCSeries e = to_assoc(table(d, {{k, d - 2 - k, 1}}).to_lie(), d);
            SparseVector v;
            for (const auto& [word, c] : e.terms()) v.emplace(word.bits(), c);
            rows.insert(std::move(v));
        }
        EXPECT_EQ(rows.rank(), static_cast<std::size_t>(d - 1)) << d;
    }
}

TEST(Metabelian, ProjectionOfGenerators) {
    const MetabelianElement p = project(LieElement::generator(Letter::X) * Rational(3), 3);
    EXPECT_EQ(p.x_coeff(), Rational(3));
    EXPECT_TRUE(p.table().empty());
    // [YXY] is itself the basis element with k = 0, l = 1
    const MetabelianElement q = project(long_commutator("YXY"), 3);
    EXPECT_EQ(q, table(3, {{0, 1, 1}}));
    EXPECT_EQ(project(long_commutator("YX"), 2), table(2, {{0, 0, -1}}));
}

TEST(Metabelian, AdjointActionsCommuteOnCommutators) {
    const MetabelianElement b = table(7, {{0, 0, 1}, {1, 2, Rational(1, 3)}});
    EXPECT_EQ(ad_x(ad_y(b)), ad_y(ad_x(b)));
    EXPECT_EQ(ad_x(b), project(bracket(LieElement::generator(Letter::X), b.to_lie()), 7));
    EXPECT_EQ(ad_y(b), project(bracket(LieElement::generator(Letter::Y), b.to_lie()), 7));
}

TEST(Metabelian, ClosedFormulaMatchesProjection) {
    for (int n : {2, 4, 7, 10}) EXPECT_EQ(project(bch_recursive(n)), hausdorff_closed(n)) << n;
}

TEST(Metabelian, GoldbergCoefficients) {
    const BiSeries c = goldberg_c(9);
    EXPECT_EQ(c.coeff(1, 1), Rational(1, 2));
    EXPECT_EQ(c.coeff(2, 1), Rational(1, 12));
    EXPECT_EQ(c.coeff(1, 2), Rational(1, 12));
    const NCSeries h = bch_log_oracle(9);
    for (int r = 1; r < 9; ++r) {
        for (int s = 1; r + s <= 9; ++s) {
            EXPECT_EQ(c.coeff(r, s), nc_coefficient(h, Word(r + s, (std::uint64_t{1} << s) - 1))) << r << "," << s;
        }
    }
    const BiSeries hs = h_series(7);
    for (int k = 0; k <= 7; ++k) {
        for (int l = 0; k + l <= 7; ++l) EXPECT_EQ(c.coeff(k + 1, l + 1), sign_power(l) * hs.coeff(k, l));
    }
}

TEST(MetabelianProperty, ProjectionKillsIdeal) {
    Random r;
    for (int trial = 0; trial < mbch::testing::kPropertyCases; ++trial) {
        const int du = r.uniform(2, 4);
        const int dv = r.uniform(2, 6 - du);
        const LieElement u = r.lie_element(du), v = r.lie_element(dv);
        // u, v are random commutators, so both brackets lie in [L',L']
        const LieElement xu = bracket(LieElement::generator(Letter::X), u);
        ASSERT_TRUE(project(bracket(xu, v), 8).table().empty()) << trial;
        ASSERT_TRUE(project(bracket(u, v), 6).table().empty()) << trial;
    }
}

TEST(MetabelianProperty, ProjectionIsBracketCompatible) {
    Random r;
    for (int trial = 0; trial < mbch::testing::kPropertyCases; ++trial) {
        const int d = r.uniform(1, 5);
        const LieElement e = r.lie_element(d);
        const Letter g = r.uniform(0, 1) == 0 ? Letter::X : Letter::Y;
        const MetabelianElement pe = project(e, 6);
        const MetabelianElement lhs = project(bracket(LieElement::generator(g), e), 6);
        const MetabelianElement rhs = g == Letter::X ? ad_x(pe) : ad_y(pe);
        ASSERT_EQ(lhs, rhs);
    }
}

// ---- Zassenhaus -----------------------------------------------------------------------

TEST(Zassenhaus, LowDegreeComponents) {
    const auto parts = zassenhaus_components(4);
    EXPECT_EQ(parts.at(2), table(4, {{0, 0, Rational(-1, 2)}}));
    EXPECT_EQ(parts.at(3), table(4, {{1, 0, Rational(1, 6)}, {0, 1, Rational(1, 3)}}));
    EXPECT_EQ(parts.at(4), table(4, {{2, 0, Rational(-1, 24)}, {1, 1, Rational(-1, 8)}, {0, 2, Rational(-1, 8)}}));
}

TEST(Zassenhaus, OperatorSeries) {
    const BiSeries z = zassenhaus_operator(2);
    EXPECT_EQ(z.coeff(0, 0), Rational(-1, 2));
    EXPECT_EQ(z.coeff(1, 0), Rational(1, 6));
    EXPECT_EQ(z.coeff(0, 1), Rational(1, 3));
    EXPECT_EQ(z.coeff(2, 0), Rational(-1, 24));
    EXPECT_EQ(z.coeff(1, 1), Rational(-1, 8));
    EXPECT_EQ(z.coeff(0, 2), Rational(-1, 8));
}

TEST(Zassenhaus, OracleAgreesWithClosedForm) {
    const auto oracle = zassenhaus_oracle(7);
    const auto closed = zassenhaus_components(7);
    for (std::size_t k = 0; k < oracle.size(); ++k) EXPECT_EQ(project(oracle[k]), closed.at(static_cast<int>(k) + 2));
    // through degree 4 the quotient loses nothing
    for (int n = 2; n <= 4; ++n) {
        EXPECT_EQ(to_lyndon_coords(oracle[n - 2]), to_lyndon_coords(closed.at(n).to_lie()));
    }
}

TEST(Zassenhaus, SumMatchesLogOfProduct) {
    EXPECT_EQ(project(lie_series_of(zassenhaus_log_oracle(8))), zassenhaus_closed(8));
}

// ---- commutator equation ------------------------------------------------------------

TEST(CommutatorEquation, ParticularSolution) {
    const MetabelianElement f = kv_solve(10);
    EXPECT_EQ(f.x_coeff(), Rational(0));
    EXPECT_EQ(f.y_coeff(), Rational(1, 4));
    EXPECT_EQ(f.coeff(0, 0), Rational(1, 12));
    EXPECT_TRUE(kv_verify(f, 10));
    const MetabelianElement res = kv_residual(f, 10);
    EXPECT_TRUE(res.table().empty() && res.x_coeff().is_zero() && res.y_coeff().is_zero());
}

TEST(CommutatorEquation, ScalarIdentity) {
    const int n = 12;
    const BiSeries f = kv_f_series(n, BiSeries(0));
    const BiSeries lhs = BiSeries::x(n) * f - BiSeries::y(n) * bs_subst_negswap(f);
    EXPECT_TRUE(lhs.equal_through(h_series(n) - BiSeries::constant(Rational(1, 2), n), n));
}

TEST(CommutatorEquation, RejectsNonAntisymmetricG) {
    EXPECT_THROW(kv_solve(6, 0, BiSeries::constant(1, 3)), DomainError);
}

TEST(CommutatorEquation, RejectsWrongCandidates) {
    MetabelianElement f = kv_solve(8);
    f.add_term(1, 1, Rational(1, 1000));
    EXPECT_FALSE(kv_verify(f, 8));
    MetabelianElement g(8);
    g.set_y(Rational(1, 4));
    EXPECT_FALSE(kv_verify(g, 8));
}

TEST(CommutatorEquationProperty, FamilyOfSolutions) {
    Random r;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = r.uniform(3, 8);
        const BiSeries g = mbch::testing::antisymmetric(r, n - 3);
        const Rational a = r.rational();
        ASSERT_TRUE(kv_verify(kv_solve(n, a, g), n)) << trial;
    }
}

// ---- deeper quotient -------------------------------------------------------------------

TEST(Tilde, NormalisationOrder) {
    TildeElement e(20);
    e.add_pair({2, 0}, {1, 5}, 1);
    EXPECT_EQ(e.quadratic_coeff({2, 0}, {1, 5}), Rational(1));
    e.add_pair({1, 5}, {2, 0}, 3);
    EXPECT_EQ(e.quadratic_coeff({2, 0}, {1, 5}), Rational(-2));
    e.add_pair({1, 1}, {1, 1}, 7);
    EXPECT_EQ(e.quadratic().size(), 1U);
    EXPECT_TRUE(pair_in_basis_order({1, 2}, {1, 1}));
    EXPECT_FALSE(pair_in_basis_order({1, 1}, {1, 2}));
}

TEST(Tilde, AgreesWithHausdorffBelowDegreeSix) {
    EXPECT_EQ(to_lyndon_coords(expand_to_free(hausdorff_tilde(5))), to_lyndon_coords(bch_recursive(5)));
}

TEST(Tilde, LinearPartIsMinusH) {
    const TildeElement t = hausdorff_tilde(8);
    const BiSeries h = h_series(6);
    // {m,n} = [X^m Y^(n+1) X] = -[X^m Y^n X Y]
    for (int m = 0; m <= 6; ++m) {
        for (int n = 0; m + n <= 6; ++n) EXPECT_EQ(t.linear_coeff(m, n), -h.coeff(m, n)) << m << "," << n;
    }
}

TEST(Tilde, DifferenceLiesInDeeperIdeal) {
    const LieElement diff = expand_to_free(hausdorff_tilde(7)) - bch_recursive(7).total();
    for (int d = 1; d <= 7; ++d) {
        const LieElement part = from_lyndon_coords(to_lyndon_coords(LieSeries(diff, 7).component(d)));
        if (d <= 5) EXPECT_TRUE(part.is_zero()) << d;
        else EXPECT_TRUE(ideal_membership(part, LieIdeal::deeper)) << d;
    }
}

TEST(Tilde, ActionsMatchFreeBrackets) {
    for (int deg = 2; deg <= 6; ++deg) {
        for (int m = 0; m + 2 <= deg; ++m) {
            const TildeElement e = TildeElement::long_commutator({m, deg - 2 - m}, deg + 1);
            for (Letter g : {Letter::X, Letter::Y}) {
                EXPECT_EQ(to_lyndon_coords(expand_to_free(tilde_act(g, e))),
                          to_lyndon_coords(bracket(LieElement::generator(g), expand_to_free(e))));
            }
            const Derivation dy = derivation_dy(deg + 1);
            EXPECT_EQ(to_lyndon_coords(expand_to_free(tilde_dy(e, deg + 1))),
                      to_lyndon_coords(apply_derivation(dy, expand_to_free(e), deg + 1)));
        }
    }
}

TEST(Tilde, SecondTermMatchesRecursion) {
    const auto t = hausdorff_tilde_terms(7);
    EXPECT_EQ(to_lyndon_coords(expand_to_free(t.at(0))), to_lyndon_coords(bch_recursive_terms(7).at(2)));
}

TEST(Tilde, MetabelianImage) {
    EXPECT_EQ(project(expand_to_free(hausdorff_tilde(8)), 8), hausdorff_closed(8));
}

namespace {

SparseVector lyndon_vector(const LieElement& e) {
    SparseVector v;
    for (const auto& [word, c] : to_lyndon_coords(e)) v.emplace(word.bits(), c);
    return v;
}

std::vector<LieElement> lyndon_basis(int d) {
    std::vector<LieElement> out;
    for (const Word& word : lyndon_words(d)) out.push_back(LieElement::from_tree(standard_bracketing(word)));
    return out;
}

}  // namespace

TEST(Tilde, BasisCompletesTheIdeal) {
    // In each degree, {m,n} and [{k,l},{m,n}] together with a spanning set of
    // [L',[L',L']] must span L_d, and the quotient basis must stay independent.
    for (int d = 2; d <= 8; ++d) {
        RowEchelon rows;
        for (int du = 2; du + 4 <= d; ++du) {
            for (int dv = 2; du + dv + 2 <= d; ++dv) {
                for (const auto& u : lyndon_basis(du)) {
                    for (const auto& v : lyndon_basis(dv)) {
                        for (const auto& w : lyndon_basis(d - du - dv)) rows.insert(lyndon_vector(bracket(u, bracket(v, w))));
                    }
                }
            }
        }
        const std::size_t ideal_rank = rows.rank();
        std::size_t quotient_size = 0;
        for (int m = 0; m + 2 <= d; ++m) {
            EXPECT_TRUE(rows.insert(lyndon_vector(expand_to_free(TildeElement::long_commutator({m, d - 2 - m}, d)))));
            ++quotient_size;
        }
        for (int da = 2; da + 2 <= d; ++da) {
            for (int k = 0; k + 2 <= da; ++k) {
                for (int m = 0; m + 2 <= d - da; ++m) {
                    const LongIndex a{k, da - 2 - k}, b{m, d - da - 2 - m};
                    if (!pair_in_basis_order(a, b)) continue;
                    TildeElement e(d);
                    e.add_pair(a, b, 1);
                    EXPECT_TRUE(rows.insert(lyndon_vector(expand_to_free(e)))) << d;
                    ++quotient_size;
                }
            }
        }
        EXPECT_EQ(rows.rank(), ideal_rank + quotient_size) << d;
        EXPECT_EQ(static_cast<long>(rows.rank()), mbch::testing::necklace_count(d)) << d;
    }
}
