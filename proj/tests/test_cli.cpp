// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <fstream>
#include <siegelcong/cli.hpp>
#include <sstream>

using namespace siegelcong;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream o, e;
    int code = cli::run(args, o, e);
    return {code, o.str(), e.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    RunResult r = run_cli(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

std::string write_fixture(const std::string& name, const std::string& content) {
    std::string path = testing::TempDir() + name;
    std::ofstream os(path);
    os << content;
    return path;
}

}  // namespace

TEST(CliText, ScalarCommands) {
    RunResult r = run_cli({"bernoulli", "18"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "43867/798\n");
    EXPECT_TRUE(r.err.empty());

    EXPECT_EQ(run_cli({"zeta", "--at", "-17"}).out, "-43867/14364\n");
    EXPECT_EQ(run_cli({"genbernoulli", "9", "--d", "-4"}).out, "-12465/2\n");
    EXPECT_EQ(run_cli({"lvalue", "--at", "-8", "--d", "-4"}).out, "1385/2\n");
    EXPECT_EQ(run_cli({"cohen", "9", "4"}).out, "1385/2\n");
    EXPECT_EQ(run_cli({"cohen", "9", "2"}).out, "0\n");
    EXPECT_EQ(run_cli({"siegel-factor", "16", "--k", "10"}).out, "131073\n");
    EXPECT_EQ(run_cli({"count-t", "--w", "18", "--p", "43867"}).out, "1\n");
    EXPECT_EQ(run_cli({"hecke", "--w", "18", "--ell", "2"}).out, "-528\n");
    EXPECT_EQ(run_cli({"hecke", "--w", "24", "--ell", "2"}).out, "0 1\n20468736 1080\n");
}

TEST(CliText, NegativeOptionValuesParseAsSeparateTokens) {
    // "--d -4" and "--at -17" must survive option-value tokenization
    RunResult r = run_cli({"genbernoulli", "9", "--d", "-4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "-12465/2\n");
    r = run_cli({"table1", "--kmin", "10", "--kmax", "10", "--d", "-3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("chi_{-3}"), std::string::npos);
}

TEST(CliText, MillerBasisLayout) {
    RunResult r = run_cli({"miller", "--w", "12", "--prec", "3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "# element 0\n0 1\n1 0\n2 196560\n3 16773120\n"
              "# element 1\n0 0\n1 1\n2 -24\n3 252\n");
}

TEST(CliText, SeriesOutputMatchesLibrary) {
    RunResult r = run_cli({"eis-coeffs", "--k", "10", "--max-det", "12"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, eis_expansion(EisensteinSpec(10), 12).str());
    TIndexedSeries back = TIndexedSeries::parse(r.out);
    EXPECT_EQ(back, eis_expansion(EisensteinSpec(10), 12));
}

TEST(CliText, TablesMatchLibraryRendering) {
    RunResult r = run_cli({"table1", "--kmin", "10", "--kmax", "10"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, render_table(table1(10, 10, {Int(-4)})));

    r = run_cli({"search", "--kmin", "10", "--kmax", "10"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, render_table(table1(10, 10)));
    EXPECT_NE(r.out.find("chi_{-3}"), std::string::npos);
}

TEST(CliText, IntegralityScan) {
    RunResult r = run_cli({"check-integrality", "--k", "10", "--p", "23", "--max-det", "20"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "ok checked=35\n");  // 1 + 20 + 14 reduced forms
}

TEST(CliText, SkVerifyStages) {
    RunResult r = run_cli(
        {"sk-verify", "--k", "10", "--p", "43867", "--d", "-4", "--max-det", "50"});
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    int stage_lines = 0;
    while (std::getline(lines, line)) {
        if (line == "ok") break;
        EXPECT_EQ(line.substr(0, 5), "pass ");
        ++stage_lines;
    }
    EXPECT_EQ(stage_lines, 5);
    EXPECT_EQ(line, "ok");

    r = run_cli({"sk-verify", "--k", "10", "--p", "11", "--d", "-4", "--max-det", "20"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("fail p - 1 > 2k - 2"), std::string::npos);
    EXPECT_NE(r.out.find("skip"), std::string::npos);
    EXPECT_EQ(r.out.substr(r.out.size() - 5), "FAIL\n");
}

TEST(CliText, SkVerifyReadsDataFiles) {
    std::ostringstream hs, es;
    for (Int N = 3; N <= 20; ++N)
        if (mod4(N) == 0 || mod4(N) == 3) hs << N << " " << to_string(cohen_H(9, N)) << "\n";
    for (Int q : {2, 3, 5}) es << q << " " << (1 + pow_int(Int(q), 17)) << "\n";
    std::string h_path = write_fixture("sk_h.dat", hs.str());
    std::string e_path = write_fixture("sk_eigen.dat", es.str());
    RunResult r = run_cli({"sk-verify", "--k", "10", "--p", "43867", "--d", "-4", "--max-det",
                           "20", "--h-file", h_path, "--eigen-file", e_path});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(r.out.substr(r.out.size() - 3), "ok\n");
}

TEST(CliText, CongruenceCheckFixtures) {
    TIndexedSeries a = eis_expansion(EisensteinSpec(10), 12);
    TIndexedSeries b = a;
    b.rank2[HalfIntSym{1, 1, 2}] += 1;
    std::string pa = write_fixture("series_a.dat", a.str());
    std::string pb = write_fixture("series_b.dat", b.str());

    RunResult same = run_cli({"congruence-check", "--lhs", pa, "--rhs", pa, "--p", "23"});
    EXPECT_EQ(same.code, 0);
    EXPECT_EQ(same.out, "ok checked=" + std::to_string(a.keys().size()) + "\n");

    RunResult diff = run_cli({"congruence-check", "--lhs", pa, "--rhs", pb, "--p", "23"});
    EXPECT_EQ(diff.code, 1);
    EXPECT_EQ(diff.out.substr(0, 19), "FAIL at rank2 1 1 2");
    EXPECT_NE(diff.out.find("ord=0"), std::string::npos);

    // a prime dividing a coefficient denominator is a data error, not a
    // congruence failure
    EXPECT_EQ(run_cli({"congruence-check", "--lhs", pa, "--rhs", pa, "--p", "7"}).code, 2);

    std::string bad = write_fixture("series_bad.dat", "k 10 maxdet 12 variant content-sum\nwat\n");
    EXPECT_EQ(run_cli({"congruence-check", "--lhs", pa, "--rhs", bad, "--p", "23"}).code, 2);
    EXPECT_EQ(run_cli({"congruence-check", "--lhs", pa, "--rhs", "/nonexistent", "--p", "23"}).code,
              2);
}

TEST(CliExit, UsageAndDataErrors) {
    RunResult r = run_cli({"frobnicate"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err.substr(0, 12), "usage error:");
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"bernoulli"}).code, 2);
    EXPECT_EQ(run_cli({"bernoulli", "x"}).code, 2);
    EXPECT_EQ(run_cli({"hecke", "--w", "18"}).code, 2);

    r = run_cli({"zeta", "--at", "-4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err.substr(0, 6), "error:");
    EXPECT_EQ(run_cli({"bernoulli", "-3"}).code, 2);
    EXPECT_EQ(run_cli({"cohen", "8", "3"}).code, 2);
    EXPECT_EQ(run_cli({"check-integrality", "--k", "10", "--p", "7"}).code, 2);
    EXPECT_EQ(run_cli({"genbernoulli", "9", "--d", "-5"}).code, 2);
    EXPECT_EQ(run_cli({"eis-coeffs", "--k", "10", "--max-det", "2"}).code, 2);

    r = run_cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("siegelcong"), std::string::npos);
    EXPECT_EQ(run_cli({"cohen", "--help"}).code, 0);
}

TEST(CliJson, ScalarValues) {
    json j = run_json({"bernoulli", "18"});
    EXPECT_EQ(j["n"], 18);
    EXPECT_EQ(j["value"], "43867/798");
    EXPECT_EQ(run_json({"bernoulli", "0"})["value"], "1");
    EXPECT_EQ(run_json({"genbernoulli", "9", "--d", "-4"})["value"], "-12465/2");
    EXPECT_EQ(run_json({"zeta", "--at", "-17"})["value"], "-43867/14364");
    EXPECT_EQ(run_json({"lvalue", "--at", "-8", "--d", "-4"})["value"], "1385/2");
    EXPECT_EQ(run_json({"cohen", "9", "12"})["value"], "212490322/27");
    EXPECT_EQ(run_json({"cohen", "11", "3"})["value"], "-3694/3");
    json sf = run_json({"siegel-factor", "12", "--k", "10"});
    EXPECT_EQ(sf["value"], "131329");
    EXPECT_EQ(sf["k"], 10);
}

TEST(CliJson, SeriesRoundTrip) {
    json j = run_json({"eis-coeffs", "--k", "10", "--max-det", "12"});
    TIndexedSeries s = cli::detail::series_from_json(j);
    EXPECT_EQ(s, eis_expansion(EisensteinSpec(10), 12));

    j = run_json({"eis-coeffs", "--k", "6", "--max-det", "8", "--variant", "det-only"});
    EXPECT_EQ(j["variant"], "det-only");
    EXPECT_EQ(cli::detail::series_from_json(j),
              eis_expansion(EisensteinSpec(6, Variant::det_only), 8));
}

TEST(CliJson, IntegralityAndCount) {
    json j = run_json({"check-integrality", "--k", "10", "--p", "43867", "--max-det", "20"});
    EXPECT_EQ(j["ok"], true);
    EXPECT_EQ(j["checked"], 35);
    EXPECT_TRUE(j["violations"].empty());

    EXPECT_EQ(run_json({"count-t", "--w", "18", "--p", "43867"})["t"], 1);
    EXPECT_EQ(run_json({"count-t", "--w", "18", "--p", "11"})["t"], 0);
}

TEST(CliJson, MillerAndHecke) {
    json j = run_json({"miller", "--w", "12", "--prec", "3"});
    json expect = json::array({json::array({"1", "0", "196560", "16773120"}),
                               json::array({"0", "1", "-24", "252"})});
    EXPECT_EQ(j["basis"], expect);
    EXPECT_EQ(j["prec"], 3);

    j = run_json({"hecke", "--w", "18", "--ell", "2"});
    EXPECT_EQ(j["dim"], 1);
    EXPECT_EQ(j["matrix"], json::array({json::array({"-528"})}));
    j = run_json({"hecke", "--w", "24", "--ell", "2"});
    EXPECT_EQ(j["matrix"], json::array({json::array({"0", "1"}),
                                        json::array({"20468736", "1080"})}));
}

TEST(CliJson, SearchAndTable) {
    json j = run_json({"search", "--kmin", "10", "--kmax", "10"});
    ASSERT_EQ(j["rows"].size(), 1u);
    EXPECT_EQ(j["rows"][0]["chi"], "-3");
    EXPECT_EQ(j["rows"][0]["primes"], json::array({"43867"}));
    EXPECT_EQ(j["rows"][0]["t"], json::array({1}));
    EXPECT_EQ(j["rows"][0]["separable"], json::array({true}));

    j = run_json({"table1", "--kmin", "10", "--kmax", "12"});
    ASSERT_EQ(j["rows"].size(), 2u);
    EXPECT_EQ(j["rows"][0]["chi"], "-4");
    EXPECT_EQ(j["rows"][1]["primes"], json::array({"131", "593"}));
    EXPECT_EQ(j["rows"][1]["weight2"], 22);

    j = run_json({"table1", "--kmin", "4", "--kmax", "4"});
    EXPECT_TRUE(j["rows"][0]["chi"].is_null());
    EXPECT_TRUE(j["rows"][0]["primes"].empty());
}

TEST(CliJson, SkVerifyAndCongruence) {
    json j = run_json({"sk-verify", "--k", "10", "--p", "43867", "--d", "-4", "--max-det", "50"});
    EXPECT_EQ(j["ok"], true);
    ASSERT_EQ(j["stages"].size(), 5u);
    for (const auto& s : j["stages"]) EXPECT_EQ(s["status"], "pass");

    {
        std::vector<std::string> args{"sk-verify", "--k", "10", "--p", "5",
                                      "--d", "-4", "--max-det", "20", "--json"};
        std::ostringstream o, e;
        EXPECT_EQ(cli::run(args, o, e), 1);
        json f = json::parse(o.str());
        EXPECT_EQ(f["ok"], false);
        EXPECT_EQ(f["stages"][0]["status"], "fail");
        EXPECT_EQ(f["stages"][1]["status"], "skip");
    }

    TIndexedSeries a = eis_expansion(EisensteinSpec(10), 12);
    TIndexedSeries b = a;
    b.rank2[HalfIntSym{1, 1, 2}] += 1;
    std::string pa = write_fixture("series_ja.dat", a.str());
    std::string pb = write_fixture("series_jb.dat", b.str());
    {
        std::vector<std::string> args{"congruence-check", "--lhs", pa,
                                      "--rhs", pb,         "--p",  "23", "--json"};
        std::ostringstream o, e;
        EXPECT_EQ(cli::run(args, o, e), 1);
        json f = json::parse(o.str());
        EXPECT_EQ(f["ok"], false);
        EXPECT_EQ(f["first_failure"]["key"], "rank2 1 1 2");
        EXPECT_EQ(f["first_failure"]["ord"], 0);
    }
    {
        std::vector<std::string> args{"congruence-check", "--lhs", pa,
                                      "--rhs", pa,         "--p",  "23", "--json"};
        std::ostringstream o, e;
        EXPECT_EQ(cli::run(args, o, e), 0);
        json f = json::parse(o.str());
        EXPECT_EQ(f["ok"], true);
        EXPECT_TRUE(f["first_failure"].is_null());
        EXPECT_EQ(f["checked"], a.keys().size());
    }
}
