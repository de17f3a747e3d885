#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixmahon/cli.hpp"
#include "fixmahon/enumeration.hpp"
#include "fixmahon/f3.hpp"
#include "fixmahon/phi.hpp"
#include "fixmahon/qseries.hpp"
#include "fixmahon/text.hpp"
#include "fixmahon/verify.hpp"
#include "fixmahon/zder.hpp"

using namespace fixmahon;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "fixmahon");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SpecExamples) {
    auto r = run_cli({"f3", "--word", "1 2 0 0 1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0 0 1 2 1\n");

    r = run_cli({"stats", "--perm", "8 2 1 3 5 6 4 9 7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("maj=17\n"), std::string::npos);
    EXPECT_NE(r.out.find("maf=13\n"), std::string::npos);

    r = run_cli({"verify", "--claim", "thm-1.1", "--n", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
}

TEST(Cli, TransformsMatchLibrary) {
    const std::vector<std::string> words{"5 0 1 2 0 0 3 6 0 7 4", "0 3 0 1 2", "0 0 0 0", "2 1"};
    for (const auto& w : words) {
        const Word x = parse_word(w);
        EXPECT_EQ(run_cli({"phi", "--word", w}).out, format_word(phi(x)) + "\n");
        EXPECT_EQ(run_cli({"psi", "--word", w}).out, format_word(psi(x)) + "\n");
        EXPECT_EQ(run_cli({"f3", "--word", w}).out, format_word(f3(x)) + "\n");
        EXPECT_EQ(run_cli({"f3-inv", "--word", w}).out, format_word(f3_inv(x)) + "\n");
        EXPECT_EQ(run_cli({"zder-inv", "--word", w}).out,
                  format_permutation(zder_inv(x)) + "\n");
    }
    for (const auto& p : enum_permutations(4)) {
        const std::string s = format_permutation(p);
        EXPECT_EQ(run_cli({"phi", "--perm", s}).out, format_permutation(phi_perm(p)) + "\n");
        EXPECT_EQ(run_cli({"psi", "--perm", s}).out, format_permutation(phi_inv_perm(p)) + "\n");
        EXPECT_EQ(run_cli({"f3", "--perm", s}).out, format_permutation(f3_perm(p)) + "\n");
        EXPECT_EQ(run_cli({"f3-inv", "--perm", s}).out, format_permutation(f3_inv_perm(p)) + "\n");
        EXPECT_EQ(run_cli({"zder", "--perm", s}).out, format_word(zder(p)) + "\n");
    }
}

TEST(Cli, TableMatchesLibrary) {
    const auto t = joint_distribution(4, parse_stat_list("fix,exc,maf"));
    EXPECT_EQ(run_cli({"table", "--n", "4", "--stats", "fix,exc,maf", "--format", "csv"}).out,
              t.to_csv());
    EXPECT_EQ(run_cli({"table", "--n", "4", "--stats", "fix,exc,maf"}).out, t.to_text());
    const auto j = nlohmann::json::parse(
        run_cli({"table", "--n", "4", "--stats", "fix,exc,maf", "--format", "json"}).out);
    EXPECT_EQ(j["result"], nlohmann::json::parse(t.to_json()));
    EXPECT_EQ(j["operation"], "table");
    EXPECT_EQ(j["stats"]["total"], 24);
}

TEST(Cli, VerifyMatchesLibrary) {
    VerifyOptions o;
    o.n_max = 5;
    EXPECT_EQ(run_cli({"verify", "--claim", "thm-1.4", "--n", "5"}).out,
              verify_claim("thm-1.4", o).to_text());
    EXPECT_EQ(run_cli({"verify", "--claim", "thm-1.4", "--n", "5", "--jobs", "3"}).out,
              verify_claim("thm-1.4", o).to_text());
    EXPECT_EQ(run_cli({"verify", "--claim", "id-1.27", "--max-n", "6"}).out,
              verify_identity_127(6).to_text());
    EXPECT_EQ(run_cli({"verify", "--claim", "id-1.26", "--u", "3", "--t", "4"}).out,
              verify_identity_126(3, 4).to_text());
}

TEST(Cli, JsonSchema) {
    const auto r = run_cli({"phi", "--word", "0 3 0 1 2", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    ASSERT_FALSE(r.out.empty());
    EXPECT_EQ(r.out.back(), '\n');
    const auto j = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    EXPECT_EQ(keys, (std::vector<std::string>{"input", "operation", "result", "stats"}));
    EXPECT_EQ(j["input"], "0 3 0 1 2");
    EXPECT_EQ(j["operation"], "phi");
    EXPECT_EQ(j["result"], "0 3 1 2 0");
    EXPECT_EQ(j["stats"]["RISE•"], "{1,3,4,5}");

    const auto v = nlohmann::json::parse(
        run_cli({"verify", "--claim", "cor-1.5", "--n", "4", "--format", "json"}).out);
    EXPECT_EQ(v["result"]["pass"], true);
    EXPECT_EQ(v["result"]["claim"], "cor-1.5");
}

TEST(Cli, Trace) {
    const auto r = run_cli({"phi", "--trace", "--word", "5 0 1 2 0 0 3 6 0 7 4"});
    EXPECT_EQ(r.out,
              "phi_4: 5 0 1 2 0 0 3 6 0 7 4 (case 1, j=9)\n"
              "phi_3: 5 0 1 2 0 3 0 6 0 7 4 (case 2, j=6, k=7)\n"
              "phi_2: 5 0 1 0 2 3 0 6 0 7 4 (case 3, j=5, i=4)\n"
              "phi_1: 5 1 0 0 2 3 0 6 0 7 4 (case 2, j=2, k=3)\n"
              "5 1 0 0 2 3 0 6 0 7 4\n");
}

TEST(Cli, UsageErrors) {
    auto r = run_cli({"phi", "--word", "1 x 2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("'x'"), std::string::npos);

    r = run_cli({"phi", "--word", "0 1 2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("NotADerangement"), std::string::npos);

    r = run_cli({"stats", "--perm", "1 1 2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("InvalidPermutation"), std::string::npos);

    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({"phi"}).code, 2);
    EXPECT_EQ(run_cli({"phi", "--word", "2 1", "--perm", "2 1"}).code, 2);
    EXPECT_EQ(run_cli({"zder", "--word", "2 1"}).code, 2);
    EXPECT_EQ(run_cli({"table"}).code, 2);
    EXPECT_EQ(run_cli({"table", "--n", "3", "--stats", "fix,inv"}).code, 2);
    EXPECT_EQ(run_cli({"table", "--n", "3", "--format", "xml"}).code, 2);
    EXPECT_EQ(run_cli({"phi", "--word", "2 1", "--format", "csv"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--claim", "nope"}).code, 2);
    EXPECT_EQ(run_cli({"verify"}).code, 2);
    EXPECT_EQ(run_cli({"table", "--n", "12"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, MaxNEnvironmentOverride) {
    ASSERT_EQ(setenv("FIXMAHON_MAX_N", "3", 1), 0);
    EXPECT_EQ(run_cli({"table", "--n", "4"}).code, 2);
    EXPECT_EQ(run_cli({"table", "--n", "3"}).code, 0);
    ASSERT_EQ(setenv("FIXMAHON_MAX_N", "abc", 1), 0);
    EXPECT_EQ(run_cli({"table", "--n", "3"}).code, 2);
    unsetenv("FIXMAHON_MAX_N");
}

TEST(Cli, StatsOfWord) {
    const auto r = run_cli({"stats", "--word", "5 0 1 2 0 0 3 6 4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "Zero={2,5,6}\nPos=5 1 2 3 6 4\nDES={1,4,8}\nRISE={2,3,5,6,7,9}\n"
              "RISE•={3,4,5,7,9}\nmaj=13\nmafz=13\n");
    EXPECT_NE(run_cli({"stats", "--word", "1 0"}).out.find("RISE•=undefined"), std::string::npos);
}
