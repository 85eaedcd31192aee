#pragma once

// Associative-algebra computations whose results are read back as Lie
// elements: they serve as independent references for the closed formulas.

#include "mbch/assoc.hpp"
#include "mbch/freelie.hpp"

#include <vector>

namespace mbch {

/// Reads every positive-degree component of `a` as a Lie element.
/// Throws std::logic_error if some component is not Lie.
LieSeries lie_series_of(const NCSeries& a);

/// C_2, ..., C_N with e^{X+Y} = e^X e^Y e^{C_2} e^{C_3} ...: starting from
/// R = e^{-Y} e^{-X} e^{X+Y}, peel C_n = (degree-n part of ln R) and replace
/// R by e^{-C_n} R. Each entry holds one homogeneous component (Lyndon basis).
std::vector<LieSeries> zassenhaus_oracle(int truncation);

/// ln(e^{-Y} e^{-X} e^{X+Y}) truncated at N.
NCSeries zassenhaus_log_oracle(int truncation);

}  // namespace mbch
