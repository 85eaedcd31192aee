#pragma once

#include "mbch/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace mbch {

/// Sparse exact vector: coordinate index -> nonzero value.
using SparseVector = std::map<std::uint64_t, Rational>;

/// Incremental row echelon form over Q, for rank and span-membership tests.
class RowEchelon {
public:
    /// Adds v to the spanning set; returns true if it increased the rank.
    bool insert(SparseVector v);
    /// True if v lies in the span of the inserted vectors.
    [[nodiscard]] bool in_span(SparseVector v) const;
    [[nodiscard]] std::size_t rank() const { return pivots_.size(); }

private:
    void reduce(SparseVector& v) const;
    // pivot index -> row with leading coefficient 1 at that index
    std::map<std::uint64_t, SparseVector> pivots_;
};

}  // namespace mbch
