#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include <qhook/cli.hpp>

namespace
{

struct result {
    int status;
    std::string out;
    std::string err;
};

result run(std::initializer_list<const char *> args)
{
    std::vector<const char *> argv{"qhook"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int status = qhook::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST(CliTable, BothSourcesAgree)
{
    const auto r = run({"table", "--t", "2", "--k", "2", "--n-max", "45", "--source", "both", "--format", "csv"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out.rfind("n,value,genfun,match\n", 0), 0u);
    EXPECT_EQ(r.out.find("false"), std::string::npos);
    EXPECT_NE(r.out.find("\n45,"), std::string::npos);
}

TEST(CliTable, SingleRow)
{
    const auto r = run({"table", "--t", "2", "--k", "1", "--n-max", "1", "--format", "csv"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "n,value\n0,0\n1,1\n");
}

TEST(CliTable, UnsupportedGenfun)
{
    const auto r = run({"table", "--t", "4", "--k", "2", "--source", "genfun"});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("no generating function"), std::string::npos);
}

TEST(CliTable, JsonUsesDecimalStrings)
{
    const auto r = run({"table", "--t", "3", "--k", "2", "--n-max", "9", "--source", "genfun", "--format", "json"});
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rows"][8]["value"], "22");
    EXPECT_EQ(j["source"], "genfun");
}

TEST(CliVerify, SingleCheckJson)
{
    const auto r = run({"verify", "--check", "thm1", "--n-max", "500", "--format", "json"});
    EXPECT_EQ(r.status, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j.is_object());
    EXPECT_EQ(j["check_name"], "thm1");
    EXPECT_EQ(j["passed"], true);
    EXPECT_EQ(j["range"][1], 500);
}

TEST(CliVerify, UnknownSelector)
{
    EXPECT_EQ(run({"verify", "--check", "nosuch"}).status, 2);
    EXPECT_EQ(run({"verify"}).status, 2);
    EXPECT_EQ(run({"verify", "--all", "--check", "thm1"}).status, 2);
    EXPECT_EQ(run({"verify", "--all", "--n-max", "5"}).status, 2);
}

TEST(CliVerify, AllIsDeterministic)
{
    const auto a = run({"verify", "--all", "--n-max", "80", "--oracle-ceiling", "20", "--format", "json"});
    const auto b = run({"verify", "--all", "--n-max", "80", "--oracle-ceiling", "20", "--format", "json", "--serial"});
    EXPECT_EQ(a.status, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    ASSERT_TRUE(j.is_array());
    std::vector<std::string> names;
    for (const auto &rep : j) {
        names.push_back(rep["check_name"]);
    }
    EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
}

TEST(CliVerify, CsvHeader)
{
    const auto r = run({"verify", "--check", "euler", "--n-max", "50", "--format", "csv"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "check,n,lhs,rhs\n");
}

TEST(CliSeries, Dumps)
{
    const auto phi = run({"series", "--name", "Phi", "--trunc", "13", "--format", "csv"});
    EXPECT_EQ(phi.status, 0);
    EXPECT_EQ(phi.out, "n,value\n0,0\n1,0\n2,1\n3,-2\n4,3\n5,0\n6,5\n7,2\n8,5\n9,4\n10,3\n11,3\n12,1\n13,1\n");

    const auto g = run({"series", "--name", "G", "--trunc", "13", "--format", "json"});
    const auto j = nlohmann::json::parse(g.out);
    const std::vector<std::string> block{j["coefficients"].begin() + 4, j["coefficients"].begin() + 10};
    EXPECT_EQ(block, (std::vector<std::string>{"3", "1", "5", "5", "11", "13"}));

    EXPECT_EQ(run({"series", "--name", "nosuch"}).status, 2);
    EXPECT_EQ(run({"series", "--name", "PR", "--trunc", "10"}).status, 2);
}

TEST(CliOutput, WritesToFile)
{
    const auto path = std::filesystem::temp_directory_path() / "qhook_cli_test.csv";
    const auto r = run({"series", "--name", "PR", "--trunc", "13", "--format", "csv", "--out", path.c_str()});
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str().substr(0, 24), "n,value\n0,0\n1,0\n2,1\n3,2\n");
    std::filesystem::remove(path);
}

TEST(CliBinary, EnvironmentSetsDefaultAndFlagWins)
{
    const std::string bin = QHOOK_CLI_PATH;
    auto status = [](const std::string &cmd) {
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("QHOOK_N_MAX=30 " + bin + " verify --check thm1 --format json > /dev/null"), 0);
    // An environment value below the minimum is a configuration error unless the flag overrides it.
    EXPECT_EQ(status("QHOOK_N_MAX=3 " + bin + " verify --check thm1 > /dev/null 2>&1"), 2);
    EXPECT_EQ(status("QHOOK_N_MAX=3 " + bin + " verify --check thm1 --n-max 40 > /dev/null"), 0);
    EXPECT_EQ(status(bin + " verify --check nosuch > /dev/null 2>&1"), 2);
    EXPECT_EQ(status(bin + " --seedless series --name M > /dev/null"), 0);
}
