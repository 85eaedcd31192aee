#include "support.hpp"

#include "mbch/bch.hpp"
#include "mbch/cli.hpp"
#include "mbch/io.hpp"
#include "mbch/tilde.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mbch;
using mbch::testing::Random;
using io::Json;

// ---- JSON / CSV ------------------------------------------------------------------

TEST(Json, BiSeriesFormAndOrder) {
    BiSeries s(3);
    s.add_term(0, 1, Rational(-1, 12));
    s.add_term(1, 0, Rational(1, 12));
    s.add_term(0, 0, 2);
    EXPECT_EQ(io::to_json(s).dump(),
              R"({"truncation":3,"terms":[{"i":0,"j":0,"c":"2/1"},{"i":0,"j":1,"c":"-1/12"},{"i":1,"j":0,"c":"1/12"}]})");
}

TEST(Json, LieSeriesUsesLyndonWords) {
    const Json j = io::to_json(bch_recursive(2));
    EXPECT_EQ(j.at("basis"), "lyndon");
    EXPECT_EQ(j.at("terms").back().at("word"), "XY");
    EXPECT_EQ(j.at("terms").back().at("c"), "1/2");
}

TEST(Json, SchemaViolationsAreRejected) {
    EXPECT_THROW(io::biseries_from_json(Json::parse(R"({"terms":[]})")), io::SchemaError);
    EXPECT_THROW(io::biseries_from_json(Json::parse(R"({"truncation":2,"terms":[{"i":0,"j":0,"c":0.5}]})")), io::SchemaError);
    EXPECT_THROW(io::biseries_from_json(Json::parse(R"({"truncation":2,"terms":[{"i":3,"j":0,"c":"1"}]})")), io::SchemaError);
    EXPECT_THROW(io::lie_series_from_json(Json::parse(R"({"truncation":2,"basis":"lyndon","terms":[{"word":"YX","c":"1"}]})")),
                 io::SchemaError);
    EXPECT_THROW(io::metabelian_from_json(Json::parse(R"({"truncation":4,"basis":"words","X":"0","Y":"0","terms":[]})")),
                 io::SchemaError);
    EXPECT_THROW(io::tilde_from_json(Json::parse(
                     R"({"truncation":9,"X":"0","Y":"0","linear":[],"quadratic":[{"k":0,"l":0,"m":1,"n":0,"c":"1"}]})")),
                 io::SchemaError);
}

TEST(JsonProperty, BiSeriesRoundTrip) {
    Random r;
    for (int trial = 0; trial < mbch::testing::kPropertyCases; ++trial) {
        const BiSeries s = r.biseries(r.uniform(0, 6));
        const std::string text = io::to_json(s).dump();
        const BiSeries back = io::biseries_from_json(Json::parse(text));
        ASSERT_EQ(back, s);
        ASSERT_EQ(io::to_json(back).dump(), text);
    }
}

TEST(JsonProperty, LieAndAssocRoundTrip) {
    Random r;
    for (int trial = 0; trial < mbch::testing::kPropertyCases; ++trial) {
        const int d = r.uniform(1, 6);
        const LieSeries s(r.lie_element(d) + r.lie_element(r.uniform(1, d)), 6);
        const LieSeries back = io::lie_series_from_json(Json::parse(io::to_json(s).dump()));
        ASSERT_EQ(to_lyndon_coords(back), to_lyndon_coords(s));
        const NCSeries a = r.nc_series(6, true);
        ASSERT_EQ(io::nc_series_from_json(Json::parse(io::to_json(a).dump())), a);
    }
}

TEST(JsonProperty, MetabelianAndTildeRoundTrip) {
    Random r;
    for (int trial = 0; trial < mbch::testing::kPropertyCases; ++trial) {
        const int n = r.uniform(2, 8);
        const MetabelianElement e(n, r.rational(), r.rational(), r.biseries(n - 2));
        ASSERT_EQ(io::metabelian_from_json(Json::parse(io::to_json(e).dump())), e);
        TildeElement t(n);
        t.add_x(r.rational());
        for (int k = 0; k < 4; ++k) {
            const LongIndex a{r.uniform(0, 2), r.uniform(0, 2)};
            const LongIndex b{r.uniform(0, 2), r.uniform(0, 2)};
            t.add_linear(a, r.rational());
            t.add_pair(a, b, r.rational());
        }
        ASSERT_EQ(io::tilde_from_json(Json::parse(io::to_json(t).dump())), t);
    }
}

TEST(Csv, MetabelianTable) {
    EXPECT_EQ(io::to_csv(hausdorff_closed(4)), "k,l,c\n0,0,1/2\n0,1,-1/12\n1,0,1/12\n1,1,-1/24\n");
}

TEST(Text, LieSeriesNotation) {
    EXPECT_EQ(io::to_text(bch_recursive(3)), "X + Y + 1/2 [XY] + 1/12 [X^2Y] + 1/12 [[XY],Y]");
    EXPECT_EQ(io::to_text(LieSeries(3)), "0");
}

// ---- command line ------------------------------------------------------------------

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult mbch_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, MetabelianCsv) {
    const CliResult r = mbch_run({"metabelian", "--degree", "4", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "k,l,c\n0,0,1/2\n0,1,-1/12\n1,0,1/12\n1,1,-1/24\n");
}

TEST(Cli, ZassenhausPerDegree) {
    const CliResult r = mbch_run({"zassenhaus", "--degree", "4", "--per-degree", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "C_2 = -1/2 [XY]\n"
              "C_3 = 1/3 [YXY] + 1/6 [X^2Y]\n"
              "C_4 = -1/8 [Y^2XY] - 1/8 [XYXY] - 1/24 [X^3Y]\n");
}

TEST(Cli, VerifyAllPasses) {
    const CliResult r = mbch_run({"verify", "--suite", "all", "--degree", "6"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, BchMethodsGiveIdenticalJson) {
    const CliResult a = mbch_run({"bch", "--method", "recursive", "--degree", "6"});
    const CliResult b = mbch_run({"bch", "--method", "dynkin", "--degree", "6"});
    const CliResult c = mbch_run({"bch", "--method", "oracle", "--degree", "6"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(io::lie_series_from_json(Json::parse(a.out)).truncation(), 6);
}

TEST(Cli, OutputIsByteStable) {
    EXPECT_EQ(mbch_run({"deeper", "--degree", "6"}).out, mbch_run({"deeper", "--degree", "6"}).out);
    EXPECT_EQ(mbch_run({"goldberg", "-n", "7", "-f", "csv"}).out, mbch_run({"goldberg", "-n", "7", "-f", "csv"}).out);
}

TEST(Cli, GoldbergCsvHeader) {
    const CliResult r = mbch_run({"goldberg", "--degree", "2", "--format", "csv"});
    EXPECT_EQ(r.out, "r,s,c\n1,1,1/2\n");
}

TEST(Cli, KvSolveReportsVerification) {
    const CliResult r = mbch_run({"kv-solve", "--degree", "6", "--a", "2/3"});
    EXPECT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_TRUE(j.at("verified").get<bool>());
    EXPECT_EQ(j.at("F").at("X"), "2/3");
    EXPECT_EQ(j.at("F").at("Y"), "1/4");
}

TEST(Cli, KvSolveAcceptsInlineG) {
    const std::string g = R"({"truncation":3,"terms":[{"i":1,"j":0,"c":"1"},{"i":0,"j":1,"c":"1"}]})";
    const CliResult r = mbch_run({"kv-solve", "--degree", "6", "--g", g});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(Json::parse(r.out).at("verified").get<bool>());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(mbch_run({}).code, 2);
    EXPECT_EQ(mbch_run({"nonsense"}).code, 2);
    EXPECT_EQ(mbch_run({"bch", "--bogus"}).code, 2);
    EXPECT_EQ(mbch_run({"bch", "--method", "magic"}).code, 2);
    EXPECT_EQ(mbch_run({"bch", "--method", "dynkin", "--degree", "13"}).code, 2);
    EXPECT_EQ(mbch_run({"bch", "--method", "oracle", "--degree", "15"}).code, 2);
    EXPECT_EQ(mbch_run({"metabelian", "--degree", "65"}).code, 2);
    EXPECT_EQ(mbch_run({"metabelian", "--degree", "1"}).code, 2);
    EXPECT_EQ(mbch_run({"kv-solve", "--g", "{not json"}).code, 2);
    EXPECT_EQ(mbch_run({"kv-solve", "--g", R"({"truncation":2,"terms":[{"i":0,"j":0,"c":"1"}]})"}).code, 2);
    EXPECT_EQ(mbch_run({"kv-solve", "--a", "1/0"}).code, 2);
    EXPECT_EQ(mbch_run({"verify", "--suite", "everything"}).code, 2);
    EXPECT_EQ(mbch_run({"metabelian", "--format", "xml"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
    const CliResult r = mbch_run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("zassenhaus"), std::string::npos);
}

TEST(Cli, EnvironmentOverridesCap) {
    ::setenv(cli::kMaxDegreeEnv, "3", 1);
    EXPECT_EQ(mbch_run({"metabelian", "--degree", "4"}).code, 2);
    EXPECT_EQ(mbch_run({"metabelian", "--degree", "3"}).code, 0);
    ::setenv(cli::kMaxDegreeEnv, "x", 1);
    EXPECT_EQ(mbch_run({"metabelian", "--degree", "3"}).code, 2);
    ::unsetenv(cli::kMaxDegreeEnv);
}

TEST(Cli, WritesOutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "mbch_cli_test.json";
    const CliResult r = mbch_run({"metabelian", "--degree", "5", "--output", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    const Json j = Json::parse(in);
    EXPECT_EQ(io::metabelian_from_json(j.at("hausdorff")), hausdorff_closed(5));
    std::filesystem::remove(path);
}
