#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dill/cli.hpp"

namespace {

const std::string rules_dir = DILL_RULES_DIR;

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = dill::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string rule(const std::string& name) { return rules_dir + "/" + name; }

} // namespace

TEST(Cli, DistValues)
{
    EXPECT_EQ(run({"dist", "abab", "baba"}).out, "4\n");
    EXPECT_EQ(run({"dist", "abba", "baab", "--metric", "levenshtein"}).out, "2\n");
    EXPECT_EQ(run({"dist", "ab", "a", "--metric", "levenshtein"}).out, "1/2\n");
    EXPECT_EQ(run({"dist", "periodic:a", "word:aaab!a", "--metric", "cantor"}).out, "1/8\n");
    auto j = nlohmann::json::parse(run({"dist", "ab", "bb", "--json"}).out);
    EXPECT_EQ(j["value"], "1");
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({}).code, dill::cli::exit_usage);
    EXPECT_EQ(run({"frobnicate"}).code, dill::cli::exit_usage);
    EXPECT_EQ(run({"dist", "ab", "a"}).code, dill::cli::exit_usage);
    EXPECT_EQ(run({"dist", "ab", "ba", "--metric", "taxicab"}).code, dill::cli::exit_usage);
    EXPECT_EQ(run({"classify", rule("missing.rule")}).code, dill::cli::exit_usage);
    EXPECT_EQ(run({"reproduce", "nope"}).code, dill::cli::exit_usage);
    EXPECT_EQ(run({"pseudo", "periodic:ab", "bogus"}).code, dill::cli::exit_usage);
    EXPECT_EQ(run({"--help"}).code, dill::cli::exit_ok);
    EXPECT_EQ(run({"verify", "--suite", "distances", "--seed", "3"}).code, dill::cli::exit_ok);
}

TEST(Cli, RuleParseErrorReportsLine)
{
    auto path = std::filesystem::temp_directory_path() / "dill_cli_bad.rule";
    {
        std::ofstream f(path);
        f << "alphabet: ab\ndiameter: 1\na -> ab\nb -> c\n";
    }
    CliResult r = run({"classify", path.string()});
    std::filesystem::remove(path);
    EXPECT_EQ(r.code, dill::cli::exit_usage);
    EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST(Cli, ClassifyIsDeterministicJson)
{
    CliResult a = run({"classify", rule("fibonacci.rule")});
    CliResult b = run({"classify", rule("fibonacci.rule")});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["cycle_means"]["min"]["mean"], "1");
    EXPECT_EQ(j["cycle_means"]["max"]["mean"], "2");
    EXPECT_EQ(j["diamond_uniform"], false);
    EXPECT_EQ(j["verdicts"]["WeylH"]["verdict"], "NotWellDefined");

    auto d = nlohmann::json::parse(run({"classify", rule("diamond.rule"), "--space", "L"}).out);
    EXPECT_EQ(d["verdicts"].size(), 1u);
    EXPECT_EQ(d["verdicts"]["WeylL"]["verdict"], "WellDefined");
}

TEST(Cli, Witness)
{
    CliResult r = run({"witness", rule("fibonacci.rule")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("alpha\t"), std::string::npos);
    EXPECT_EQ(run({"witness", rule("diamond.rule")}).out, "diamond-uniform, cycle mean 2\n");
}

TEST(Cli, PseudoLadder)
{
    CliResult r = run({"pseudo", "periodic:ab", "periodic:ba", "--metric", "levenshtein", "--ell", "4,8", "--K", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "ell\tK\tvalue_num\tvalue_den\n4\t3\t1\t4\n8\t3\t1\t8\n");
    CliResult img = run({"pseudo", "periodic:a", "periodic:b", "--rule", rule("fibonacci.rule"), "--ell", "8"});
    EXPECT_EQ(img.out, "ell\tK\tvalue_num\tvalue_den\n8\t32\t1\t2\n");
    CliResult bes = run({"pseudo", "periodic:ab", "periodic:ba", "--besicovitch", "--ell", "5"});
    EXPECT_EQ(bes.out, "5\t1\n");
}

TEST(Cli, ReproduceFibonacci)
{
    CliResult r = run({"reproduce", "fibonacci-weyl", "--json"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["passed"], true);
}
