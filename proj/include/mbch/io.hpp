#pragma once

// JSON / CSV / text forms of the library's series types. Rationals are always
// strings "p/q" in machine-readable output; terms are emitted in a fixed order
// so output is byte-stable.

#include "mbch/assoc.hpp"
#include "mbch/freelie.hpp"
#include "mbch/metabelian.hpp"
#include "mbch/series.hpp"
#include "mbch/tilde.hpp"

#include "json.hpp"

#include <string>

namespace mbch::io {

using Json = nlohmann::ordered_json;

/// Thrown for documents that do not follow the schema.
class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// {"truncation": N, "terms": [{"i": int, "j": int, "c": "p/q"}, ...]}
Json to_json(const BiSeries& s);
BiSeries biseries_from_json(const Json& j);

// {"truncation": N, "basis": "lyndon", "terms": [{"word": "XXY", "c": "p/q"}, ...]}
Json to_json(const LieSeries& s);
LieSeries lie_series_from_json(const Json& j);

// {"truncation": N, "basis": "words", "terms": [{"word": "", "c": "p/q"}, ...]}
Json to_json(const NCSeries& s);
NCSeries nc_series_from_json(const Json& j);

// {"truncation": N, "basis": "metabelian", "X": "p/q", "Y": "p/q",
//  "terms": [{"k": int, "l": int, "c": "p/q"}, ...]}
Json to_json(const MetabelianElement& e);
MetabelianElement metabelian_from_json(const Json& j);

// {"truncation": N, "X": "p/q", "Y": "p/q", "linear": [{"m","n","c"}],
//  "quadratic": [{"k","l","m","n","c"}]}
Json to_json(const TildeElement& e);
TildeElement tilde_from_json(const Json& j);

/// Header `first,second,c` then one row per term, e.g. "k,l,c".
std::string to_csv(const BiSeries& s, const std::string& first = "i", const std::string& second = "j");
/// Header `k,l,c`; only the [X^k Y^l X Y] table.
std::string to_csv(const MetabelianElement& e);
/// Header `word,c` in Lyndon coordinates.
std::string to_csv(const LieSeries& s);
/// Header `kind,k,l,m,n,c`; kind is X, Y, linear or quadratic.
std::string to_csv(const TildeElement& e);

/// Lyndon-basis text, e.g. "X + Y + 1/2 [XY] + 1/12 [X^2Y] + 1/12 [[XY],Y]".
std::string to_text(const LieSeries& s);

}  // namespace mbch::io
