#include "mbch/io.hpp"

#include <sstream>

namespace mbch::io {

namespace {

int get_int(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
        throw SchemaError(std::string("expected integer field '") + key + "'");
    }
    return j.at(key).get<int>();
}

Rational get_rational(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
        throw SchemaError(std::string("expected rational string field '") + key + "'");
    }
    try {
        return Rational::parse(j.at(key).get<std::string>());
    } catch (const std::exception& e) {
        throw SchemaError(std::string("field '") + key + "': " + e.what());
    }
}

const Json& get_array(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
        throw SchemaError(std::string("expected array field '") + key + "'");
    }
    return j.at(key);
}

void expect_basis(const Json& j, const char* basis) {
    if (!j.contains("basis") || j.at("basis") != basis) {
        throw SchemaError(std::string("expected \"basis\": \"") + basis + "\"");
    }
}

int get_truncation(const Json& j, int minimum) {
    const int n = get_int(j, "truncation");
    if (n < minimum) throw SchemaError("truncation below " + std::to_string(minimum));
    return n;
}

std::string frac(const Rational& r) { return r.to_fraction_string(); }

}  // namespace

// ---------------------------------------------------------------------------
// JSON

Json to_json(const BiSeries& s) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back(Json{{"i", e.i}, {"j", e.j}, {"c", frac(c)}});
    return Json{{"truncation", s.truncation()}, {"terms", std::move(terms)}};
}

BiSeries biseries_from_json(const Json& j) {
    BiSeries s(get_truncation(j, 0));
    for (const auto& t : get_array(j, "terms")) {
        const int i = get_int(t, "i");
        const int k = get_int(t, "j");
        if (i < 0 || k < 0 || i + k > s.truncation()) throw SchemaError("term exponent outside truncation");
        s.add_term(i, k, get_rational(t, "c"));
    }
    return s;
}

Json to_json(const LieSeries& s) {
    Json terms = Json::array();
    for (const auto& [w, c] : to_lyndon_coords(s)) terms.push_back(Json{{"word", w.to_string()}, {"c", frac(c)}});
    return Json{{"truncation", s.truncation()}, {"basis", "lyndon"}, {"terms", std::move(terms)}};
}

LieSeries lie_series_from_json(const Json& j) {
    const int n = get_truncation(j, 1);
    expect_basis(j, "lyndon");
    LyndonCoords coords;
    for (const auto& t : get_array(j, "terms")) {
        if (!t.contains("word") || !t.at("word").is_string()) throw SchemaError("expected string field 'word'");
        Word w;
        try {
            w = Word::from_string(t.at("word").get<std::string>());
        } catch (const std::exception& e) {
            throw SchemaError(e.what());
        }
        if (!is_lyndon(w)) throw SchemaError("not a Lyndon word: " + w.to_string());
        if (w.length() > n) throw SchemaError("word beyond truncation");
        coords[w] += get_rational(t, "c");
    }
    std::erase_if(coords, [](const auto& kv) { return kv.second.is_zero(); });
    return LieSeries(from_lyndon_coords(coords), n);
}

Json to_json(const NCSeries& s) {
    Json terms = Json::array();
    for (const auto& [w, c] : s.terms()) terms.push_back(Json{{"word", w.to_string()}, {"c", frac(c)}});
    return Json{{"truncation", s.truncation()}, {"basis", "words"}, {"terms", std::move(terms)}};
}

NCSeries nc_series_from_json(const Json& j) {
    NCSeries s(get_truncation(j, 0));
    expect_basis(j, "words");
    for (const auto& t : get_array(j, "terms")) {
        if (!t.contains("word") || !t.at("word").is_string()) throw SchemaError("expected string field 'word'");
        Word w;
        try {
            w = Word::from_string(t.at("word").get<std::string>());
        } catch (const std::exception& e) {
            throw SchemaError(e.what());
        }
        if (w.length() > s.truncation()) throw SchemaError("word beyond truncation");
        s.add_term(w, get_rational(t, "c"));
    }
    return s;
}

Json to_json(const MetabelianElement& e) {
    Json terms = Json::array();
    for (const auto& [ex, c] : e.table()) terms.push_back(Json{{"k", ex.i}, {"l", ex.j}, {"c", frac(c)}});
    return Json{{"truncation", e.truncation()},
                {"basis", "metabelian"},
                {"X", frac(e.x_coeff())},
                {"Y", frac(e.y_coeff())},
                {"terms", std::move(terms)}};
}

MetabelianElement metabelian_from_json(const Json& j) {
    MetabelianElement e(get_truncation(j, 1));
    expect_basis(j, "metabelian");
    e.set_x(get_rational(j, "X"));
    e.set_y(get_rational(j, "Y"));
    for (const auto& t : get_array(j, "terms")) {
        const int k = get_int(t, "k");
        const int l = get_int(t, "l");
        if (k < 0 || l < 0 || k + l + 2 > e.truncation()) throw SchemaError("term index outside truncation");
        e.add_term(k, l, get_rational(t, "c"));
    }
    return e;
}

Json to_json(const TildeElement& e) {
    Json linear = Json::array();
    for (const auto& [i, c] : e.linear()) linear.push_back(Json{{"m", i.m}, {"n", i.n}, {"c", frac(c)}});
    Json quadratic = Json::array();
    for (const auto& [p, c] : e.quadratic()) {
        quadratic.push_back(Json{{"k", p.first.m}, {"l", p.first.n}, {"m", p.second.m}, {"n", p.second.n}, {"c", frac(c)}});
    }
    return Json{{"truncation", e.truncation()},
                {"X", frac(e.x_coeff())},
                {"Y", frac(e.y_coeff())},
                {"linear", std::move(linear)},
                {"quadratic", std::move(quadratic)}};
}

TildeElement tilde_from_json(const Json& j) {
    TildeElement e(get_truncation(j, 1));
    e.add_x(get_rational(j, "X"));
    e.add_y(get_rational(j, "Y"));
    for (const auto& t : get_array(j, "linear")) {
        const LongIndex i{get_int(t, "m"), get_int(t, "n")};
        if (i.m < 0 || i.n < 0 || i.degree() > e.truncation()) throw SchemaError("linear index outside truncation");
        e.add_linear(i, get_rational(t, "c"));
    }
    for (const auto& t : get_array(j, "quadratic")) {
        const LongIndex a{get_int(t, "k"), get_int(t, "l")};
        const LongIndex b{get_int(t, "m"), get_int(t, "n")};
        if (a.m < 0 || a.n < 0 || b.m < 0 || b.n < 0 || a.degree() + b.degree() > e.truncation()) {
            throw SchemaError("quadratic index outside truncation");
        }
        if (!pair_in_basis_order(a, b)) throw SchemaError("quadratic index violates basis order");
        e.add_pair(a, b, get_rational(t, "c"));
    }
    return e;
}

// ---------------------------------------------------------------------------
// CSV and text

std::string to_csv(const BiSeries& s, const std::string& first, const std::string& second) {
    std::ostringstream os;
    os << first << "," << second << ",c\n";
    for (const auto& [e, c] : s.terms()) os << e.i << "," << e.j << "," << frac(c) << "\n";
    return os.str();
}

std::string to_csv(const MetabelianElement& e) {
    std::ostringstream os;
    os << "k,l,c\n";
    for (const auto& [ex, c] : e.table()) os << ex.i << "," << ex.j << "," << frac(c) << "\n";
    return os.str();
}

std::string to_csv(const LieSeries& s) {
    std::ostringstream os;
    os << "word,c\n";
    for (const auto& [w, c] : to_lyndon_coords(s)) os << w.to_string() << "," << frac(c) << "\n";
    return os.str();
}

std::string to_csv(const TildeElement& e) {
    std::ostringstream os;
    os << "kind,k,l,m,n,c\n";
    if (!e.x_coeff().is_zero()) os << "X,,,,," << frac(e.x_coeff()) << "\n";
    if (!e.y_coeff().is_zero()) os << "Y,,,,," << frac(e.y_coeff()) << "\n";
    for (const auto& [i, c] : e.linear()) os << "linear,,," << i.m << "," << i.n << "," << frac(c) << "\n";
    for (const auto& [p, c] : e.quadratic()) {
        os << "quadratic," << p.first.m << "," << p.first.n << "," << p.second.m << "," << p.second.n << "," << frac(c) << "\n";
    }
    return os.str();
}

std::string to_text(const LieSeries& s) {
    const LyndonCoords coords = to_lyndon_coords(s);
    if (coords.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : coords) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (mag != Rational(1)) os << mag << " ";
        os << standard_bracketing(w).to_long_notation();
    }
    return os.str();
}

}  // namespace mbch::io
