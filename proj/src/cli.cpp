#include "mbch/cli.hpp"

#include "mbch/bch.hpp"
#include "mbch/errors.hpp"
#include "mbch/io.hpp"
#include "mbch/metabelian.hpp"
#include "mbch/oracle.hpp"
#include "mbch/tilde.hpp"
#include "mbch/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace mbch::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int degree = kDefaultDegree;
    std::string method = "recursive";
    std::string format = "json";
    std::string output;
    std::string a = "0";
    std::string g = "zero";
    std::string suite = "all";
    bool per_degree = false;
};

// Caps keep every command at desk-scale runtime.
int degree_cap(const std::string& command, const std::string& method) {
    if (const char* env = std::getenv(kMaxDegreeEnv); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const int cap = std::stoi(env, &used);
            if (used == std::string(env).size() && cap >= 1) return cap;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string(kMaxDegreeEnv) + " must be a positive integer");
    }
    if (command == "bch") {
        if (method == "dynkin") return 12;
        if (method == "oracle") return 14;
        if (method == "recursive") return 16;
        return 64;
    }
    if (command == "deeper") return 12;
    if (command == "verify") return 14;
    return 64;
}

void check_degree(const std::string& command, const Options& o, int minimum) {
    if (o.degree < minimum) throw UsageError("--degree must be at least " + std::to_string(minimum));
    const int cap = degree_cap(command, o.method);
    if (o.degree > cap) {
        throw UsageError("--degree " + std::to_string(o.degree) + " exceeds the cap " + std::to_string(cap) +
                         " for this command (set " + kMaxDegreeEnv + " to override)");
    }
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

BiSeries parse_g(const std::string& text, int degree) {
    if (text == "zero") return BiSeries(std::max(0, degree - 3));
    try {
        return io::biseries_from_json(io::Json::parse(text));
    } catch (const io::Json::exception& e) {
        throw UsageError(std::string("--g: ") + e.what());
    } catch (const io::SchemaError& e) {
        throw UsageError(std::string("--g: ") + e.what());
    }
}

Rational parse_a(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError("--a: expected a rational \"p\" or \"p/q\", got '" + text + "'");
    }
}

std::string lie_output(const LieSeries& s, const std::string& format) {
    if (format == "csv") return io::to_csv(s);
    if (format == "text") return io::to_text(s) + "\n";
    return dump(io::to_json(s));
}

std::string cmd_bch(const Options& o) {
    check_degree("bch", o, 1);
    if (o.method == "recursive") return lie_output(bch_recursive(o.degree), o.format);
    if (o.method == "dynkin") return lie_output(bch_dynkin(o.degree), o.format);
    if (o.method == "oracle") return lie_output(lie_series_of(bch_log_oracle(o.degree)), o.format);
    // closed: only the metabelian image is available in closed form
    const MetabelianElement e = hausdorff_closed(std::max(o.degree, 2));
    if (o.format == "csv") return io::to_csv(e);
    if (o.format == "text") return e.to_string() + "\n";
    return dump(io::to_json(e));
}

std::string cmd_metabelian(const Options& o) {
    check_degree("metabelian", o, 2);
    const MetabelianElement e = hausdorff_closed(o.degree);
    if (o.format == "csv") return io::to_csv(e);
    const BiSeries h = e.operator_series();
    if (o.format == "text") return "H = " + e.to_string() + "\nh(x,y) = " + h.to_string() + "\n";
    return dump(io::Json{{"hausdorff", io::to_json(e)}, {"h", io::to_json(h)}});
}

std::string cmd_goldberg(const Options& o) {
    check_degree("goldberg", o, 1);
    const BiSeries c = goldberg_c(o.degree);
    if (o.format == "csv") return io::to_csv(c, "r", "s");
    if (o.format == "text") return "c(x,y) = " + c.to_string() + "\n";
    return dump(io::to_json(c));
}

std::string cmd_zassenhaus(const Options& o) {
    check_degree("zassenhaus", o, 2);
    const MetabelianElement total = zassenhaus_closed(o.degree);
    if (!o.per_degree) {
        if (o.format == "csv") return io::to_csv(total);
        if (o.format == "text") return "z(x,y) = " + zassenhaus_operator(o.degree - 2).to_string() + "\n";
        return dump(io::Json{{"operator", io::to_json(zassenhaus_operator(o.degree - 2))}, {"sum", io::to_json(total)}});
    }
    const auto parts = zassenhaus_components(o.degree);
    std::ostringstream os;
    if (o.format == "csv") {
        os << "n,k,l,c\n";
        for (const auto& [n, e] : parts) {
            for (const auto& [ex, c] : e.table()) os << n << "," << ex.i << "," << ex.j << "," << c.to_fraction_string() << "\n";
        }
        return os.str();
    }
    if (o.format == "text") {
        for (const auto& [n, e] : parts) os << "C_" << n << " = " << e.to_string() << "\n";
        return os.str();
    }
    io::Json list = io::Json::array();
    for (const auto& [n, e] : parts) list.push_back(io::Json{{"degree", n}, {"element", io::to_json(e)}});
    return dump(io::Json{{"components", std::move(list)}});
}

std::string cmd_kv(const Options& o, bool& verified) {
    check_degree("kv-solve", o, 2);
    const Rational a = parse_a(o.a);
    const BiSeries g = parse_g(o.g, o.degree);
    MetabelianElement f;
    try {
        f = kv_solve(o.degree, a, g);
    } catch (const InexactDivision&) {
        throw;
    } catch (const DomainError& e) {
        throw UsageError(std::string("--g: ") + e.what());
    }
    verified = kv_verify(f, o.degree);
    if (o.format == "csv") return io::to_csv(f);
    if (o.format == "text") return "F = " + f.to_string() + "\nverified: " + (verified ? "true" : "false") + "\n";
    return dump(io::Json{{"F", io::to_json(f)}, {"verified", verified}});
}

std::string cmd_deeper(const Options& o) {
    check_degree("deeper", o, 2);
    const TildeElement e = hausdorff_tilde(o.degree);
    if (o.format == "csv") return io::to_csv(e);
    if (o.format == "text") return e.to_string() + "\n";
    return dump(io::to_json(e));
}

std::string cmd_verify(const Options& o, bool& all_passed) {
    check_degree("verify", o, 2);
    Suite suite{};
    try {
        suite = parse_suite(o.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto results = run_suite(suite, o.degree);
    all_passed = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    std::ostringstream os;
    if (o.format == "json") {
        io::Json list = io::Json::array();
        for (const auto& r : results) list.push_back(io::Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        return dump(io::Json{{"degree", o.degree}, {"passed", all_passed}, {"checks", std::move(list)}});
    }
    if (o.format == "csv") {
        os << "name,passed\n";
        for (const auto& r : results) os << r.name << "," << (r.passed ? "true" : "false") << "\n";
        return os.str();
    }
    for (const auto& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) os << ": " << r.detail;
        os << "\n";
    }
    os << (all_passed ? "all checks passed" : "some checks failed") << "\n";
    return os.str();
}

void add_common(CLI::App* sub, Options& o, bool default_text = false) {
    sub->add_option("--degree,-n", o.degree, "Truncation degree")->capture_default_str();
    auto* fmt = sub->add_option("--format,-f", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    if (default_text) fmt->default_str("text");
    sub->add_option("--output,-o", o.output, "Write to this file instead of standard output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact Baker-Campbell-Hausdorff computations in free and metabelian Lie algebras", "mbch"};
    app.require_subcommand(1);

    auto* bch = app.add_subcommand("bch", "Hausdorff series ln(e^X e^Y) in the Lyndon basis");
    add_common(bch, o);
    bch->add_option("--method,-m", o.method, "recursive, dynkin, oracle or closed")
        ->check(CLI::IsMember({"recursive", "dynkin", "oracle", "closed"}))
        ->capture_default_str();

    auto* meta = app.add_subcommand("metabelian", "Closed metabelian Hausdorff series and h(x,y)");
    add_common(meta, o);
    auto* gold = app.add_subcommand("goldberg", "Coefficients c_rs of X^r Y^s in ln(e^X e^Y)");
    add_common(gold, o);
    auto* zas = app.add_subcommand("zassenhaus", "Metabelian Zassenhaus terms");
    add_common(zas, o);
    zas->add_flag("--per-degree", o.per_degree, "Split into C_2, ..., C_N");
    auto* kv = app.add_subcommand("kv-solve", "Solution F of the symmetrised commutator equation");
    add_common(kv, o);
    kv->add_option("--a", o.a, "Free coefficient of X in F")->capture_default_str();
    kv->add_option("--g", o.g, "Antisymmetric g(x,y) as BiSeries JSON, or \"zero\"")->capture_default_str();
    auto* deep = app.add_subcommand("deeper", "Hausdorff series modulo [L',[L',L']]");
    add_common(deep, o);
    auto* ver = app.add_subcommand("verify", "Run self-check suites");
    add_common(ver, o, true);
    ver->add_option("--suite,-s", o.suite, "all, bch, metabelian, zassenhaus, kv or deeper")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "mbch: " << e.what() << "\n";
        if (!app.get_subcommands().empty()) err << app.get_subcommands().front()->help();
        return usage_error;
    }
    if (ver->parsed() && ver->count("--format") == 0) o.format = "text";

    int code = ok;
    std::string payload;
    try {
        if (bch->parsed()) payload = cmd_bch(o);
        else if (meta->parsed()) payload = cmd_metabelian(o);
        else if (gold->parsed()) payload = cmd_goldberg(o);
        else if (zas->parsed()) payload = cmd_zassenhaus(o);
        else if (deep->parsed()) payload = cmd_deeper(o);
        else if (kv->parsed()) {
            bool verified = false;
            payload = cmd_kv(o, verified);
            if (!verified) code = verification_failed;
        } else if (ver->parsed()) {
            bool passed = false;
            payload = cmd_verify(o, passed);
            if (!passed) code = verification_failed;
        }
    } catch (const UsageError& e) {
        err << "mbch: " << e.what() << "\n";
        return usage_error;
    } catch (const InexactDivision& e) {
        err << "mbch: internal error: " << e.what() << "\n";
        return inexact_division;
    }

    if (o.output.empty()) {
        out << payload;
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file || !(file << payload)) {
            err << "mbch: cannot write '" << o.output << "'\n";
            return usage_error;
        }
    }
    return code;
}

}  // namespace mbch::cli
