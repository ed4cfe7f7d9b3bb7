#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run(const std::string& args) {
    const fs::path dir = fs::temp_directory_path();
    const fs::path out = dir / ("rootnum_cli_out_" + std::to_string(::getpid()));
    const fs::path err = dir / ("rootnum_cli_err_" + std::to_string(::getpid()));
    const std::string cmd = std::string(ROOTNUM_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    };
    CliRun r{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
    fs::remove(out);
    fs::remove(err);
    return r;
}

std::string data(const std::string& rel) { return std::string(ROOTNUM_TEST_DATA) + "/" + rel; }

std::string write_temp(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p.string();
}

} // namespace

TEST(CliEval, SuccessJsonAndTable) {
    const auto job = write_temp("rootnum_job_v7.json", R"({"dimension": 1, "infinite_places": 1, "places": [
        {"label": "v7", "p": 7, "reduction": {"kind": "potentially_good", "e": 6, "galois_abelian": true}}]})");
    const CliRun j = run("eval " + job + " --format json");
    ASSERT_EQ(j.status, 0) << j.err;
    const auto parsed = nlohmann::json::parse(j.out);
    EXPECT_EQ(parsed["places"][0]["w"], -1);
    EXPECT_EQ(parsed["global_w"], 1);

    const CliRun t = run("eval " + job);
    ASSERT_EQ(t.status, 0);
    EXPECT_NE(t.out.find("global w = 1"), std::string::npos);
}

TEST(CliEval, ValidationFailureExitsTwo) {
    const auto job = write_temp("rootnum_job_wild.json", R"({"dimension": 1, "places": [
        {"label": "v5", "p": 5, "reduction": {"kind": "potentially_good", "e": 4, "r": 1, "galois_abelian": true}}]})");
    const CliRun r = run("eval " + job);
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("WildPhiNotDividing2g"), std::string::npos);
    const CliRun j = run("eval " + job + " --format json");
    EXPECT_EQ(j.status, 2);
    EXPECT_EQ(nlohmann::json::parse(j.out)["validation"]["passed"], false);
}

TEST(CliEval, ParseAndIoErrorsExitOne) {
    const auto bad = write_temp("rootnum_job_bad.json", "{ not json");
    EXPECT_EQ(run("eval " + bad).status, 1);
    EXPECT_EQ(run("eval /nonexistent/job.json").status, 1);
    EXPECT_EQ(run("eval " + bad + " --format xml").status, 1);
}

TEST(CliEval, P2Override) {
    const std::string job = data("jobs/p2_split_override.json");
    EXPECT_EQ(run("eval " + job).status, 2);
    const CliRun r = run("eval " + job + " --allow-p2-multiplicative --format json");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["places"][0]["outside_hypotheses"], true);
}

TEST(CliVerify, SmallSuitesPass) {
    const CliRun a = run("verify --suite abelian --pmax 13");
    EXPECT_EQ(a.status, 0);
    EXPECT_NE(a.out.find("mismatches 0"), std::string::npos);
    const CliRun s = run("verify --suite sp2 --qmax 100");
    EXPECT_EQ(s.status, 0);
    EXPECT_NE(s.out.find("checked 87"), std::string::npos);
    EXPECT_EQ(run("verify --suite gauss --qmax 32").status, 0);
    EXPECT_EQ(run("verify --suite induced --qmax 7 --kernel reference").status, 0);
}

TEST(CliVerify, BoundViolationsExitOne) {
    EXPECT_EQ(run("verify --suite induced --qmax 201").status, 1);
    EXPECT_EQ(run("verify --suite abelian --pmax 101").status, 1);
    EXPECT_EQ(run("verify --suite nosuch").status, 1);
}

TEST(CliSweep, CsvShape) {
    const CliRun r = run("sweep --g 1 --case abelian,split --q 5,7");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("q,e,r,case,w_iota,w\n", 0), 0u);
    EXPECT_NE(r.out.find("7,6,0,abelian,-1,-1\n"), std::string::npos);
    EXPECT_NE(r.out.find("7,,,split,-1,-1\n"), std::string::npos);
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(CliSweep, EvenDimensionAndEdgeCases) {
    const CliRun r = run("sweep --g 2 --qmax 50");
    ASSERT_EQ(r.status, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        EXPECT_EQ(line.substr(line.rfind(',') + 1), "1") << line;
    }
    EXPECT_GT(rows, 50);

    const CliRun empty = run("sweep --case abelian --q 5 --e 7");
    EXPECT_EQ(empty.status, 0);
    EXPECT_EQ(empty.out, "q,e,r,case,w_iota,w\n");

    EXPECT_EQ(run("sweep --q 12").status, 1);
    EXPECT_EQ(run("sweep --case toric --q 5").status, 1);
    EXPECT_EQ(run("sweep --qmax 2000000").status, 1);
}
