#include "mbch/oracle.hpp"

#include <stdexcept>

namespace mbch {

LieSeries lie_series_of(const NCSeries& a) {
    if (!a.constant_term().is_zero()) throw std::logic_error("lie_series_of: nonzero constant term");
    LyndonCoords all;
    for (int d = 1; d <= a.truncation(); ++d) {
        auto part = extract_lie(a, d);
        if (!part) throw std::logic_error("lie_series_of: degree " + std::to_string(d) + " component is not a Lie element");
        all.merge(*part);
    }
    return LieSeries(from_lyndon_coords(all), std::max(1, a.truncation()));
}

namespace {

NCSeries start_product(int n) {
    const NCSeries x = NCSeries::generator(Letter::X, n);
    const NCSeries y = NCSeries::generator(Letter::Y, n);
    return nc_exp(-y) * nc_exp(-x) * nc_exp(x + y);
}

}  // namespace

std::vector<LieSeries> zassenhaus_oracle(int truncation) {
    if (truncation < 2) throw std::invalid_argument("zassenhaus_oracle: truncation must be >= 2");
    NCSeries r = start_product(truncation);
    std::vector<LieSeries> out;
    for (int n = 2; n <= truncation; ++n) {
        auto coords = extract_lie(nc_log(r), n);
        if (!coords) throw std::logic_error("zassenhaus_oracle: degree " + std::to_string(n) + " part is not a Lie element");
        LieSeries cn(from_lyndon_coords(*coords), truncation);
        r = nc_exp(-to_assoc(cn)) * r;
        out.push_back(std::move(cn));
    }
    return out;
}

NCSeries zassenhaus_log_oracle(int truncation) { return nc_log(start_product(truncation)); }

}  // namespace mbch
