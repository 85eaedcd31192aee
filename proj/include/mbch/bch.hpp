#pragma once

// The Hausdorff series ln(e^X e^Y) inside the free Lie algebra, by the
// classical derivation recursion and by Dynkin's explicit sum.

#include "mbch/freelie.hpp"

namespace mbch {

/// Working degree used by the CLI when none is given.
inline constexpr int kDefaultDegree = 8;

/// X + sum_{n=1}^{N-1} (B_n / n!) [Y^n X]: the image of Y under D_Y.
LieSeries hausdorff_h1(int truncation);

/// The derivation D_Y: X -> 0, Y -> hausdorff_h1.
Derivation derivation_dy(int truncation);

/// Sum_{m=0}^{N} H_m with H_0 = Y and H_m = D_Y(H_{m-1}) / m, each H_m
/// rewritten in the Lyndon basis.
LieSeries bch_recursive(int truncation);

/// The individual terms H_0, ..., H_N of the recursion (Lyndon basis).
std::vector<LieSeries> bch_recursive_terms(int truncation);

/// Dynkin's sum over tuples (p_1, q_1, ..., p_m, q_m), grouped per word as
/// long commutators.
LieSeries bch_dynkin(int truncation);

}  // namespace mbch
