// Python extension: thin wrappers that return the library's JSON documents
// as strings; the metabch package turns them into Fractions.

#include "mbch/bch.hpp"
#include "mbch/cli.hpp"
#include "mbch/errors.hpp"
#include "mbch/io.hpp"
#include "mbch/oracle.hpp"
#include "mbch/tilde.hpp"
#include "mbch/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

namespace py = pybind11;
using namespace mbch;

namespace {

using release = py::call_guard<py::gil_scoped_release>;

std::string dumps(const io::Json& j) { return j.dump(); }

std::string bch_json(int degree, const std::string& method) {
    if (method == "recursive") return dumps(io::to_json(bch_recursive(degree)));
    if (method == "dynkin") return dumps(io::to_json(bch_dynkin(degree)));
    if (method == "oracle") return dumps(io::to_json(lie_series_of(bch_log_oracle(degree))));
    throw std::invalid_argument("method must be 'recursive', 'dynkin' or 'oracle'");
}

std::string zassenhaus_json(int degree) {
    io::Json parts = io::Json::array();
    for (const auto& [n, e] : zassenhaus_components(degree)) parts.push_back(io::Json{{"degree", n}, {"element", io::to_json(e)}});
    return dumps(io::Json{{"operator", io::to_json(zassenhaus_operator(degree - 2))},
                          {"sum", io::to_json(zassenhaus_closed(degree))},
                          {"components", std::move(parts)}});
}

std::string kv_json(int degree, const std::string& a, const std::string& g) {
    const BiSeries gs = g.empty() ? BiSeries(0) : io::biseries_from_json(io::Json::parse(g));
    const MetabelianElement f = kv_solve(degree, Rational::parse(a), gs);
    return dumps(io::Json{{"F", io::to_json(f)}, {"verified", kv_verify(f, degree)}});
}

std::vector<std::tuple<std::string, bool, std::string>> verify(const std::string& suite, int degree) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& r : run_suite(parse_suite(suite), degree)) out.emplace_back(r.name, r.passed, r.detail);
    return out;
}

std::tuple<int, std::string, std::string> run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact BCH computations in free and metabelian Lie algebras";

    py::register_exception<InexactDivision>(m, "InexactDivision", PyExc_ArithmeticError);

    m.def("bernoulli", [](int n) { return bernoulli(n).to_fraction_string(); }, py::arg("n"));
    m.def("bch", &bch_json, py::arg("degree"), py::arg("method") = "recursive", release());
    m.def("h_series", [](int n) { return dumps(io::to_json(h_series(n))); }, py::arg("degree"), release());
    m.def("metabelian", [](int n) { return dumps(io::to_json(hausdorff_closed(n))); }, py::arg("degree"), release());
    m.def("goldberg", [](int n) { return dumps(io::to_json(goldberg_c(n))); }, py::arg("degree"), release());
    m.def("zassenhaus", &zassenhaus_json, py::arg("degree"), release());
    m.def("kv_solve", &kv_json, py::arg("degree"), py::arg("a") = "0", py::arg("g") = "", release());
    m.def("deeper", [](int n) { return dumps(io::to_json(hausdorff_tilde(n))); }, py::arg("degree"), release());
    m.def("verify", &verify, py::arg("suite") = "all", py::arg("degree") = kDefaultDegree, release());
    m.def("run_cli", &run_cli, py::arg("args"), release());
}
