#include "mbch/verify.hpp"

#include "mbch/bch.hpp"
#include "mbch/linalg.hpp"
#include "mbch/metabelian.hpp"
#include "mbch/oracle.hpp"
#include "mbch/tilde.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace mbch {

Suite parse_suite(const std::string& name) {
    if (name == "all") return Suite::all;
    if (name == "bch") return Suite::bch;
    if (name == "metabelian") return Suite::metabelian;
    if (name == "zassenhaus") return Suite::zassenhaus;
    if (name == "kv") return Suite::kv;
    if (name == "deeper") return Suite::deeper;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

namespace {

using Check = std::function<std::string()>;  // empty string = pass

void run(std::vector<CheckResult>& out, const std::string& name, const Check& check) {
    CheckResult r{name, false, {}};
    try {
        r.detail = check();
        r.passed = r.detail.empty();
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
}

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

void bch_checks(std::vector<CheckResult>& out, int n) {
    const int dyn = std::min(n, 12);
    run(out, "bch.triple_agreement", [&]() -> std::string {
        const NCSeries oracle = bch_log_oracle(n);
        if (to_assoc(bch_recursive(n)) != oracle) return std::string("recursive != oracle");
        if (!to_assoc(bch_dynkin(dyn)).equal_through(oracle, dyn)) return std::string("dynkin != oracle");
        return std::string();
    });
    run(out, "bch.oracle_components_are_lie", [&]() -> std::string {
        const NCSeries oracle = bch_log_oracle(n);
        for (int d = 1; d <= n; ++d) {
            auto coords = extract_lie(oracle, d);
            if (!coords) return "degree " + std::to_string(d) + " is not Lie";
            if (to_assoc(from_lyndon_coords(*coords), n) != oracle.component(d)) {
                return "degree " + std::to_string(d) + " does not re-expand";
            }
        }
        return std::string();
    });
    run(out, "bch.antisymmetry", [&]() -> std::string {
        const NCSeries h = bch_log_oracle(n);
        const NCSeries x = NCSeries::generator(Letter::X, n);
        const NCSeries y = NCSeries::generator(Letter::Y, n);
        const NCSeries reversed = nc_log(nc_exp(-y) * nc_exp(-x));
        if (nc_negswap(h) != reversed) return std::string("substitution mismatch");
        return expect(reversed == -h, "ln(e^X e^Y) != -ln(e^-Y e^-X)");
    });
    run(out, "bch.goldberg_sign_relation", [&]() -> std::string {
        const int m = std::min(n, 8);
        const NCSeries h = bch_log_oracle(m);
        for (int len = 1; len <= m; ++len) {
            const std::uint64_t mask = (std::uint64_t{1} << len) - 1;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (len - 1)); ++bits) {
                const Word wx(len, bits);          // starts with X
                const Word wy(len, ~bits & mask);  // same blocks, starts with Y
                if (nc_coefficient(h, wy) != sign_power(len - 1) * nc_coefficient(h, wx)) {
                    return "sign relation fails at " + wx.to_string();
                }
            }
        }
        return std::string();
    });
}

void metabelian_checks(std::vector<CheckResult>& out, int n) {
    run(out, "metabelian.closed_vs_recursive",
        [&]() -> std::string { return expect(project(bch_recursive(n)) == hausdorff_closed(n), "projection differs"); });
    run(out, "metabelian.closed_vs_oracle", [&]() -> std::string {
        return expect(project(lie_series_of(bch_log_oracle(n))) == hausdorff_closed(n), "projection differs");
    });
    run(out, "metabelian.h_symmetry", [&]() -> std::string {
        const BiSeries h = h_series(n);
        return expect(bs_subst_negswap(h) == h, "h(x,y) != h(-y,-x)");
    });
    run(out, "metabelian.goldberg_vs_oracle", [&]() -> std::string {
        const BiSeries c = goldberg_c(n);
        const NCSeries h = bch_log_oracle(n);
        for (int r = 1; r < n; ++r) {
            for (int s = 1; r + s <= n; ++s) {
                const Word w(r + s, (std::uint64_t{1} << s) - 1);
                if (c.coeff(r, s) != nc_coefficient(h, w)) {
                    return "c_" + std::to_string(r) + std::to_string(s) + " differs";
                }
            }
        }
        return expect(c.coeff(0, 0).is_zero(), "constant term");
    });
    run(out, "metabelian.goldberg_vs_h", [&]() -> std::string {
        const BiSeries c = goldberg_c(n);
        const BiSeries h = h_series(n - 2);
        for (int k = 0; k + 2 <= n; ++k) {
            for (int l = 0; k + l + 2 <= n; ++l) {
                if (c.coeff(k + 1, l + 1) != sign_power(l) * h.coeff(k, l)) {
                    return "c_{k+1,l+1} != (-1)^l h_kl at k=" + std::to_string(k) + ", l=" + std::to_string(l);
                }
            }
        }
        const BiSeries xyh = BiSeries::x(n) * BiSeries::y(n) * bs_scale(h_series(n), 1, -1);
        return expect(c == xyh.truncated(n), "c(x,y) != x y h(x,-y)");
    });
    run(out, "metabelian.basis_independent", [&]() -> std::string {
        for (int d = 2; d <= std::min(n, 8); ++d) {
            RowEchelon rows;
            for (int k = 0; k + 2 <= d; ++k) {
                MetabelianElement b(d);
                b.add_term(k, d - 2 - k, 1);
                SparseVector v;
                const NCSeries expanded = to_assoc(b.to_lie(), d);
                for (const auto& [w, c] : expanded.terms()) v.emplace(w.bits(), c);
                rows.insert(std::move(v));
            }
            if (rows.rank() != static_cast<std::size_t>(d - 1)) return "rank deficit at degree " + std::to_string(d);
        }
        return std::string();
    });
    run(out, "metabelian.projection_kills_ideal", [&]() -> std::string {
        for (int d = 4; d <= std::min(n, 8); ++d) {
            for (int du = 2; du + 2 <= d; ++du) {
                for (const Word& u : lyndon_words(du)) {
                    for (const Word& v : lyndon_words(d - du)) {
                        const LieElement e = bracket(LieElement::from_tree(standard_bracketing(u)),
                                                     LieElement::from_tree(standard_bracketing(v)));
                        if (!ideal_membership(e, LieIdeal::metabelian)) return "membership fails for [" + u.to_string() + "," + v.to_string() + "]";
                        const MetabelianElement p = project(e, d);
                        if (!p.table().empty() || !p.x_coeff().is_zero() || !p.y_coeff().is_zero()) {
                            return "projection nonzero for [" + u.to_string() + "," + v.to_string() + "]";
                        }
                    }
                }
            }
        }
        return std::string();
    });
}

void zassenhaus_checks(std::vector<CheckResult>& out, int n) {
    run(out, "zassenhaus.oracle_components", [&]() -> std::string {
        const auto closed = zassenhaus_components(n);
        const auto oracle = zassenhaus_oracle(n);
        for (std::size_t k = 0; k < oracle.size(); ++k) {
            const int deg = static_cast<int>(k) + 2;
            if (project(oracle[k]) != closed.at(deg)) return "C_" + std::to_string(deg) + " differs";
        }
        return std::string();
    });
    run(out, "zassenhaus.log_of_product", [&]() -> std::string {
        return expect(project(lie_series_of(zassenhaus_log_oracle(n))) == zassenhaus_closed(n), "sum of C_n differs");
    });
    run(out, "zassenhaus.oracle_reproduces_exponential", [&]() -> std::string {
        const NCSeries x = NCSeries::generator(Letter::X, n);
        const NCSeries y = NCSeries::generator(Letter::Y, n);
        NCSeries product = nc_exp(x) * nc_exp(y);
        for (const auto& c : zassenhaus_oracle(n)) product = product * nc_exp(to_assoc(c));
        return expect(product == nc_exp(x + y), "e^X e^Y prod e^{C_n} != e^{X+Y}");
    });
}

BiSeries random_antisymmetric(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> coin(-4, 4);
    BiSeries p(degree);
    for (int d = 0; d <= degree; ++d) {
        for (int i = 0; i <= d; ++i) {
            const int num = coin(rng);
            if (num != 0) p.add_term(i, d - i, Rational(num, 1 + (coin(rng) + 4)));
        }
    }
    return p - bs_subst_negswap(p);
}

void kv_checks(std::vector<CheckResult>& out, int n) {
    run(out, "kv.particular_solution", [&]() -> std::string { return expect(kv_verify(kv_solve(n), n), "residual nonzero"); });
    run(out, "kv.scalar_identity", [&]() -> std::string {
        const BiSeries f = kv_f_series(n, BiSeries(0));
        const BiSeries lhs = BiSeries::x(n) * f - BiSeries::y(n) * bs_subst_negswap(f);
        const BiSeries rhs = h_series(n) - BiSeries::constant(Rational(1, 2), n);
        return expect(lhs.equal_through(rhs, n), "x f(x,y) - y f(-y,-x) != h - 1/2");
    });
    run(out, "kv.solution_family", [&]() -> std::string {
        std::mt19937 rng(20240601U);
        std::uniform_int_distribution<int> num(-50, 50);
        for (int trial = 0; trial < 10; ++trial) {
            const BiSeries g = random_antisymmetric(rng, std::max(0, std::min(n - 3, 8)));
            const Rational a(num(rng), 7);
            if (!kv_verify(kv_solve(n, a, g), n)) return "trial " + std::to_string(trial) + " fails";
        }
        return std::string();
    });
    run(out, "kv.rejects_wrong_candidate", [&]() -> std::string {
        if (n < 3) return std::string();
        MetabelianElement f(n);
        f.set_y(Rational(1, 4));
        return expect(!kv_verify(f, n), "Y/4 alone accepted");
    });
}

void deeper_checks(std::vector<CheckResult>& out, int n) {
    run(out, "deeper.exact_below_degree_6", [&]() -> std::string {
        const int m = std::min(n, 5);
        return expect(to_lyndon_coords(expand_to_free(hausdorff_tilde(m))) == to_lyndon_coords(bch_recursive(m)),
                      "expansion differs from the Hausdorff series");
    });
    run(out, "deeper.difference_in_ideal", [&]() -> std::string {
        const int m = std::min(n, 7);
        if (m < 6) return std::string();
        const LieElement diff = expand_to_free(hausdorff_tilde(m)) - bch_recursive(m).total();
        const LyndonCoords coords = to_lyndon_coords(diff);
        for (int d = 1; d <= 5; ++d) {
            for (const auto& [w, c] : coords) {
                if (w.length() == d) return "difference nonzero in degree " + std::to_string(d);
            }
        }
        for (int d = 6; d <= m; ++d) {
            LyndonCoords part;
            for (const auto& [w, c] : coords) {
                if (w.length() == d) part.emplace(w, c);
            }
            if (!ideal_membership(from_lyndon_coords(part), LieIdeal::deeper)) {
                return "degree " + std::to_string(d) + " difference outside [L',[L',L']]";
            }
        }
        return std::string();
    });
    run(out, "deeper.adjoint_action_exact", [&]() -> std::string {
        const int m = std::min(n, 6);
        for (int deg = 2; deg <= m; ++deg) {
            for (int i = 0; i + 2 <= deg; ++i) {
                const LongIndex idx{i, deg - 2 - i};
                const TildeElement e = TildeElement::long_commutator(idx, deg + 1);
                for (Letter g : {Letter::X, Letter::Y}) {
                    const LieElement lhs = expand_to_free(tilde_act(g, e));
                    const LieElement rhs = bracket(LieElement::generator(g), expand_to_free(e));
                    if (to_lyndon_coords(lhs) != to_lyndon_coords(rhs)) return "action mismatch";
                }
            }
        }
        return std::string();
    });
    run(out, "deeper.dy_action_exact", [&]() -> std::string {
        const int m = std::min(n, 6);
        const int budget = m + 1;
        const Derivation dy = derivation_dy(budget);
        for (int deg = 2; deg <= m; ++deg) {
            for (int i = 0; i + 2 <= deg; ++i) {
                const TildeElement e = TildeElement::long_commutator(LongIndex{i, deg - 2 - i}, budget);
                const LieElement lhs = expand_to_free(tilde_dy(e, budget));
                const LieElement rhs = apply_derivation(dy, expand_to_free(e), budget);
                if (to_lyndon_coords(lhs) != to_lyndon_coords(rhs)) {
                    return "D_Y mismatch at {" + std::to_string(i) + "," + std::to_string(deg - 2 - i) + "}";
                }
            }
        }
        return std::string();
    });
    run(out, "deeper.h2_matches_recursion", [&]() -> std::string {
        const int m = std::min(n, 7);
        const auto tilde_terms = hausdorff_tilde_terms(m);
        const auto classical = bch_recursive_terms(m);
        return expect(to_lyndon_coords(expand_to_free(tilde_terms.at(0))) == to_lyndon_coords(classical.at(2)),
                      "H_(2) != H_2");
    });
    run(out, "deeper.metabelian_image", [&]() -> std::string {
        const int m = std::min(n, 8);
        return expect(project(expand_to_free(hausdorff_tilde(m)), m) == hausdorff_closed(m), "metabelian image differs");
    });
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, int degree) {
    if (degree < 2) throw std::invalid_argument("verify: degree must be >= 2");
    std::vector<CheckResult> out;
    const bool all = suite == Suite::all;
    if (all || suite == Suite::bch) bch_checks(out, degree);
    if (all || suite == Suite::metabelian) metabelian_checks(out, degree);
    if (all || suite == Suite::zassenhaus) zassenhaus_checks(out, degree);
    if (all || suite == Suite::kv) kv_checks(out, degree);
    if (all || suite == Suite::deeper) deeper_checks(out, degree);
    return out;
}

}  // namespace mbch
