#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
};

Outcome run(const std::string& args, bool merge_stderr = false)
{
    std::string cmd = std::string(MMOCK_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_lines(const std::string& s)
{
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

// True if every leaf is a string, bool or null.
bool no_binary_numbers(const json& j)
{
    if (j.is_number()) return false;
    if (j.is_structured())
        for (const auto& v : j)
            if (!no_binary_numbers(v)) return false;
    return true;
}

} // namespace

TEST(Cli, AlphaCsvRows)
{
    Outcome r = run("alpha --j 1 --max 5 --format csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,value");
    EXPECT_EQ(count_lines(r.out), 7);
    EXPECT_NE(r.out.find("1,1/3\n"), std::string::npos);
}

TEST(Cli, HurwitzJson)
{
    Outcome r = run("hurwitz --max 4");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_TRUE(no_binary_numbers(j));
    ASSERT_EQ(j["rows"].size(), 5u);
    EXPECT_EQ(j["rows"][0]["value"], "-1/12");
    EXPECT_EQ(j["rows"][3]["value"], "1/3");
}

TEST(Cli, UnknownFlagIsUsageError)
{
    Outcome r = run("alpha --j 1 --max 5 --frobnicate", true);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("--max"), std::string::npos);
    EXPECT_NE(r.out.find("Usage"), std::string::npos);
}

TEST(Cli, BadValuesAreUsageErrors)
{
    EXPECT_EQ(run("alpha --j 2 --max 5").code, 2);
    EXPECT_EQ(run("rademacher --j 0 --n 1 --phase-variant sideways").code, 2);
    EXPECT_EQ(run("kloosterman --j 0 --l 0 --n 1 --m 1 --k 0").code, 2);
    EXPECT_EQ(run("--bits 32 kloosterman --j 0 --l 0 --n 1 --m 1 --k 3").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, TablesAreStringValued)
{
    for (const char* args : {"alpha --j 0 --max 6", "euler --c1 -1 --max 5", "poincare --rank 2 --c1 0 --max 4", "asympt --j 1 --n 20",
                             "kloosterman --j 1 --l 1 --n 4 --m 9 --k 7"}) {
        Outcome r = run(args);
        ASSERT_EQ(r.code, 0) << args;
        EXPECT_TRUE(no_binary_numbers(json::parse(r.out))) << args;
    }
}

TEST(Cli, PoincareBettiVectorsArePalindromic)
{
    json j = json::parse(run("poincare --rank 2 --c1 -1 --max 4").out);
    for (const auto& row : j["rows"]) {
        const auto& b = row["betti"];
        EXPECT_EQ(b.size(), 2 * std::stoul(row["dimension"].get<std::string>()) + 1);
        for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b[i], b[b.size() - 1 - i]);
    }
}

TEST(Cli, KloostermanAtKOne)
{
    json j = json::parse(run("kloosterman --j 0 --l 0 --n 3 --m 0 --k 1 --bits 128").out);
    EXPECT_EQ(j["re"].get<std::string>().substr(0, 12), "-7.071067811");
    EXPECT_EQ(j["bits"], "128");
}

TEST(Cli, RademacherReportShape)
{
    Outcome r = run("rademacher --j 1 --n 2 --kmax 6");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_TRUE(no_binary_numbers(j));
    EXPECT_EQ(j["exact"], "3/1");
    EXPECT_EQ(j["phase_variant"], "theorem");
    ASSERT_EQ(j["partials"].size(), 6u);
    for (const char* key : {"k", "s1", "s2", "s3", "running", "abs_error"}) EXPECT_TRUE(j["partials"][5].contains(key)) << key;
    EXPECT_LT(std::stod(j["abs_error"].get<std::string>()), 0.05);
}

TEST(Cli, OutputIndependentOfThreadCount)
{
    Outcome a = run("rademacher --j 0 --n 3 --kmax 9 --threads 1");
    Outcome b = run("rademacher --j 0 --n 3 --kmax 9 --threads 4");
    Outcome c = run("rademacher --j 0 --n 3 --kmax 9 --threads 1");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
}

TEST(Cli, DerivationVariantReportsPrecisionFailure)
{
    Outcome r = run("rademacher --j 1 --n 1 --kmax 3 --phase-variant derivation");
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(json::parse(r.out)["error"], "PrecisionInsufficient");
}

TEST(Cli, VerifyIdentities)
{
    Outcome r = run("verify --suite identities --order 20");
    EXPECT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_TRUE(j["first_failure"].is_null());
    EXPECT_EQ(j["checks"].size(), 3u);
}

TEST(Cli, VerifyFailureStopsAtFirstMismatch)
{
    Outcome r = run("verify --suite rademacher --kmax 1");
    EXPECT_EQ(r.code, 1);
    json j = json::parse(r.out);
    EXPECT_FALSE(j["passed"].get<bool>());
    EXPECT_EQ(j["checks"].size(), 1u);
    EXPECT_EQ(j["first_failure"]["j"], "0");
    EXPECT_EQ(j["first_failure"]["n"], "1");
}

TEST(Cli, VerifyAll)
{
    Outcome r = run("verify --suite all --order 30");
    EXPECT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_TRUE(no_binary_numbers(j));
}
