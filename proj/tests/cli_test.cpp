#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace
{

struct Outcome {
    int code = -1;
    std::string out;
};

Outcome run(const std::string &args, const std::string &env = "")
{
    Outcome r;
    const std::string command = env + " " + std::string(PADIC_EIS_BINARY) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST(Cli, ZetaRendersTheRational)
{
    const Outcome r = run("zeta --p 5 --s 0 --x 1/5");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("= 3/10"), std::string::npos) << r.out;
}

TEST(Cli, KubotaLeopoldtValue)
{
    const Outcome r = run("lp --p 5 --s -3 --u 4 --levels 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("= -31/30"), std::string::npos) << r.out;
}

TEST(Cli, PoleExitsWithTwo)
{
    EXPECT_EQ(run("zeta --p 5 --s 1 --x 1/5").code, 2);
    EXPECT_EQ(run("family --p 5 --s 0 --x 1/5 --order 3").code, 2);
}

TEST(Cli, InvalidArgumentsExitWithTwo)
{
    EXPECT_EQ(run("zeta --p 4 --s 0 --x 1/5").code, 2);
    EXPECT_EQ(run("zeta --p 5 --s 0 --x 3").code, 2);
    EXPECT_EQ(run("zeta --p 5 --prec 2 --s 0 --x 1/5").code, 2);
    EXPECT_EQ(run("classical --k 4 --order 5000").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("selftest --p 4").code, 2);
}

TEST(Cli, PrecisionExhaustedExitsWithThree)
{
    EXPECT_EQ(run("zeta --p 5 --s 0 --x ...000.0").code, 3);
}

TEST(Cli, FamilyExpansionCheck)
{
    const Outcome r = run("family --p 5 --s 2 --x 1/25 --order 8 --check expansion --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["series"]["order"], 8);
    ASSERT_EQ(j["expansion_agreement"].size(), 9U);
    for (const auto &v : j["expansion_agreement"]) {
        EXPECT_TRUE(v.is_null() || v.get<int>() >= 8);
    }
}

TEST(Cli, SerreAndClassical)
{
    const Outcome serre = run("serre --p 5 --s 4 --u 0 --order 4 --levels 6");
    EXPECT_EQ(serre.code, 0);
    EXPECT_NE(serre.out.find("q^0: ...4242424242.2 (mod 5^10) = -31/60"), std::string::npos) << serre.out;
    EXPECT_NE(serre.out.find("q^1: ...000000000001 (mod 5^12) = 1"), std::string::npos);
    const Outcome classical = run("classical --k 4 --order 2");
    EXPECT_EQ(classical.out, "q^0: 1/240\nq^1: 1\nq^2: 9\n");
    EXPECT_EQ(run("serre --p 5 --s 4 --u 1 --order 4").code, 2);
}

TEST(Cli, OutputIsDeterministic)
{
    const std::string args = "family --p 5 --s 7/3 --x 2/25 --order 6 --format json";
    const Outcome a = run(args + " --threads 1");
    const Outcome b = run(args + " --threads 3");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CsvAndFileOutput)
{
    const Outcome csv = run("epj --p 5 --j 2 --s 3 --order 2 --format csv");
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.rfind("n,value\n", 0), 0U);
    const std::string path = std::string(::testing::TempDir()) + "padic_cli_out.json";
    const Outcome file = run("hp --p 5 --s 2 --a 3 --F 25 --format json --out " + path);
    EXPECT_EQ(file.code, 0);
    EXPECT_TRUE(file.out.empty());
    FILE *f = std::fopen(path.c_str(), "r");
    ASSERT_NE(f, nullptr);
    std::fclose(f);
}

TEST(Cli, EnvironmentPrecision)
{
    const Outcome plain = run("zeta --p 5 --s 0 --x 1/5 --format json");
    const Outcome env = run("zeta --p 5 --s 0 --x 1/5 --format json", "PADIC_PREC=6");
    EXPECT_EQ(nlohmann::json::parse(plain.out)["prec"], 12);
    EXPECT_EQ(nlohmann::json::parse(env.out)["prec"], 6);
    EXPECT_EQ(run("zeta --p 5 --s 0 --x 1/5", "PADIC_PREC=abc").code, 2);
}
