#include "mbch/linalg.hpp"

namespace mbch {

void RowEchelon::reduce(SparseVector& v) const {
    // Pivots are visited in increasing order; subtracting a pivot row only
    // touches indices >= its pivot, so a single forward sweep suffices.
    auto it = v.begin();
    while (it != v.end()) {
        auto p = pivots_.find(it->first);
        if (p == pivots_.end()) {
            ++it;
            continue;
        }
        const Rational factor = it->second;
        const std::uint64_t key = it->first;
        for (const auto& [idx, val] : p->second) {
            auto [slot, inserted] = v.try_emplace(idx, Rational());
            slot->second.add_product(factor, -val);
            if (slot->second.is_zero()) v.erase(slot);
        }
        it = v.upper_bound(key);
    }
}

bool RowEchelon::insert(SparseVector v) {
    reduce(v);
    if (v.empty()) return false;
    const Rational lead = v.begin()->second;
    for (auto& [idx, val] : v) val /= lead;
    // Keep rows fully reduced against the new pivot so reduce() stays one pass.
    const std::uint64_t key = v.begin()->first;
    for (auto& [pk, row] : pivots_) {
        auto hit = row.find(key);
        if (hit == row.end()) continue;
        const Rational factor = hit->second;
        for (const auto& [idx, val] : v) {
            auto [slot, inserted] = row.try_emplace(idx, Rational());
            slot->second.add_product(factor, -val);
            if (slot->second.is_zero()) row.erase(slot);
        }
    }
    pivots_.emplace(key, std::move(v));
    return true;
}

bool RowEchelon::in_span(SparseVector v) const {
    reduce(v);
    return v.empty();
}

}  // namespace mbch
