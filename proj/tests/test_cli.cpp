#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using tautilt::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

std::string fixture(const std::string& name) { return std::string(TAUTILT_FIXTURE_DIR) + "/" + name; }

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++n;
    return n;
}

std::vector<fs::path> entries(const fs::path& dir) {
    std::vector<fs::path> files;
    if (!fs::exists(dir)) return files;
    for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
    return files;
}

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("tautilt-cli-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    [[nodiscard]] const fs::path& path() const { return path_; }
    [[nodiscard]] std::string str(const std::string& child = "") const { return (path_ / child).string(); }

private:
    fs::path path_;
};

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << text;
}

}  // namespace

TEST(Cli, SpecExamples) {
    auto r = call({"--no-cache", "tau", fixture("a3lin.alg"), "--module", "010"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "001\n");

    r = call({"--no-cache", "hasse", fixture("a3rel.alg"), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"vertices\": 12"), std::string::npos);

    r = call({"--no-cache", "indecs", fixture("kronecker.alg")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("not representation-finite within caps"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("[homological]"), std::string::npos) << r.err;
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(call({"--no-cache", "basis", fixture("a2.alg")}).code, 0);
    EXPECT_EQ(call({"--help"}).code, 0);
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"frobnicate", fixture("a2.alg")}).code, 2);
    EXPECT_EQ(call({"--no-cache", "basis", "/nonexistent/x.alg"}).code, 2);
    EXPECT_EQ(call({"--no-cache", "tau", fixture("a3lin.alg"), "--module", "999"}).code, 2);
    EXPECT_EQ(call({"--no-cache", "hasse", fixture("a2.alg"), "--format", "svg"}).code, 2);
    EXPECT_EQ(call({"--no-cache", "torsion-oracle", fixture("a2.alg"), "--format", "dot"}).code, 2);

    auto r = call({"--no-cache", "tau", fixture("skewed.alg"), "--module", "111"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("ambiguous"), std::string::npos);
    EXPECT_EQ(call({"--no-cache", "tau", fixture("skewed.alg"), "--module", "111'"}).code, 0);
    EXPECT_EQ(call({"--no-cache", "tau", fixture("skewed.alg"), "--module", "111#2"}).code, 0);
    EXPECT_EQ(call({"--no-cache", "tau", fixture("skewed.alg"), "--module", "111#3"}).code, 2);

    r = call({"--no-cache", "statt-check", fixture("a3lin.alg"), "--module", "010+001"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("not tau-rigid"), std::string::npos);
    EXPECT_EQ(call({"--no-cache", "mutate", fixture("a2.alg"), "-m", "11", "--at", "11"}).code, 1);

    TempDir tmp;
    write(tmp.path() / "bad.alg", "algebra B { vertices: 1, 2; arrows: a: 1->3; }\n");
    r = call({"--no-cache", "basis", tmp.str("bad.alg")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("error ["), std::string::npos) << r.err;
}

TEST(Cli, Selectors) {
    const std::string a = fixture("a3lin.alg");
    EXPECT_EQ(call({"--no-cache", "tau", a, "-m", "S(2)"}).out, "001\n");
    EXPECT_EQ(call({"--no-cache", "tau", a, "-m", "P(3)"}).out, "0\n");
    EXPECT_EQ(call({"--no-cache", "tau", a, "-m", "I(2)", "--inverse"}).out, "0\n");
    EXPECT_EQ(call({"--no-cache", "tau", a, "-m", "010+100"}).out, "001+010\n");
    EXPECT_EQ(call({"--no-cache", "hom", a, "--from", "P(1)", "--to", "I(3)"}).out, "1\n");
    EXPECT_EQ(call({"--no-cache", "ext", a, "--from", "010", "--to", "001"}).out, "1\n");

    TempDir tmp;
    auto r = call({"--no-cache", "tau", a, "-m", "100", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    write(tmp.path() / "m.json", r.out);
    EXPECT_EQ(call({"--no-cache", "tau", a, "-m", tmp.str("m.json")}).out, "001\n");
    r = call({"--no-cache", "tau", fixture("a3rel.alg"), "-m", tmp.str("m.json")});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, Verbs) {
    EXPECT_EQ(call({"--no-cache", "mutate", fixture("a2.alg"), "-m", "11", "-m", "10", "--at", "11"}).out, "(10, P2) left\n");
    EXPECT_EQ(call({"--no-cache", "mutate", fixture("a2.alg"), "-m", "01", "-k", "1", "--at", "P(1)"}).out, "(11+01, 0) right\n");
    EXPECT_EQ(call({"--no-cache", "dagger", fixture("a2.alg"), "-m", "11", "-m", "10"}).out, "(01, P1) over A2^op\n");
    EXPECT_EQ(call({"--no-cache", "bongartz", fixture("a3lin.alg"), "-m", "010"}).out, "111+011+010\n");
    EXPECT_EQ(call({"--no-cache", "bongartz", "--tilting", fixture("a3lin.alg"), "-m", "010"}).out, "111+011+010\n");
    EXPECT_NE(call({"--no-cache", "bricks", fixture("skewed.alg")}).out.find("121 fbrick 111'"), std::string::npos);
    EXPECT_NE(call({"--no-cache", "probe", fixture("a3rel.alg")}).out.find("finite"), std::string::npos);
    auto r = call({"--no-cache", "grigid", fixture("a3lin.alg"), "-m", "P(1)+010"});
    EXPECT_NE(r.out.find("g(010) = (0, 1, -1)"), std::string::npos) << r.out;
    r = call({"--no-cache", "tilt-check", fixture("a3lin.alg"), "-m", "111+011+010"});
    EXPECT_EQ(r.out, "partial tilting: yes\ntilting: yes\n");
    r = call({"--no-cache", "indecs", fixture("skewed.alg")});
    EXPECT_NE(r.out.find("9 indecomposables"), std::string::npos);
}

TEST(Cli, OracleTable) {
    const auto r = call({"--no-cache", "torsion-oracle", fixture("a2.alg")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "T        | F\n"
              "---------+---------\n"
              "0        | 11 01 10\n"
              "01       | 10\n"
              "10       | 11 01\n"
              "11 10    | 01\n"
              "11 01 10 | 0\n"
              "5 torsion classes\n");
}

TEST(Cli, DotCounts) {
    auto r = call({"--no-cache", "hasse", fixture("a2.alg"), "--format", "dot"});
    EXPECT_EQ(count(r.out, "[label="), 5u);
    EXPECT_EQ(count(r.out, " -> "), 5u);

    r = call({"--no-cache", "hasse", fixture("point.alg"), "--format", "dot"});
    EXPECT_EQ(count(r.out, "[label="), 2u);
    EXPECT_EQ(count(r.out, " -> "), 1u);

    r = call({"--no-cache", "ar-quiver", fixture("a3rel.alg"), "--format", "dot"});
    EXPECT_EQ(count(r.out, "[label="), 5u);
    EXPECT_EQ(count(r.out, "style=dashed"), 2u);
    // tau^- links 001 -> 010 -> 100 with nodes numbered in label order
    EXPECT_NE(r.out.find("n0 -> n1 [style=dashed"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("n1 -> n3 [style=dashed"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("n0 [label=\"001\""), std::string::npos);
}

TEST(Cli, Deterministic) {
    TempDir tmp;
    for (const char* alg : {"a3lin.alg", "skewed.alg", "wild4.alg"}) {
        const auto a = call({"--no-cache", "hasse", fixture(alg), "--format", "json"});
        const auto b = call({"--cache-dir", tmp.str(), "hasse", fixture(alg), "--format", "json"});
        const auto c = call({"--cache-dir", tmp.str(), "hasse", fixture(alg), "--format", "json"});
        EXPECT_EQ(a.out, b.out) << alg;
        EXPECT_EQ(b.out, c.out) << alg;
    }
}

TEST(Cache, HitIsByteIdentical) {
    TempDir tmp;
    const std::string dir = tmp.str("cache");
    auto first = call({"--cache-dir", dir, "--verbose", "indecs", fixture("skewed.alg")});
    ASSERT_EQ(first.code, 0);
    EXPECT_NE(first.err.find("cache miss"), std::string::npos);
    const auto files = entries(dir);
    ASSERT_EQ(files.size(), 1u);
    const std::string payload = slurp(files.front());

    auto second = call({"--cache-dir", dir, "--verbose", "indecs", fixture("skewed.alg")});
    EXPECT_NE(second.err.find("cache hit"), std::string::npos);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(slurp(files.front()), payload);
    EXPECT_EQ(entries(dir).size(), 1u);
}

TEST(Cache, KeyChanges) {
    TempDir tmp;
    const std::string dir = tmp.str("cache");
    write(tmp.path() / "x.alg", "algebra X { vertices: 1, 2, 3; arrows: a: 1->2, b: 2->3; relations: b*a; }\n");
    EXPECT_NE(call({"--cache-dir", dir, "--verbose", "indecs", tmp.str("x.alg")}).err.find("cache miss"), std::string::npos);
    EXPECT_NE(call({"--cache-dir", dir, "--verbose", "indecs", tmp.str("x.alg")}).err.find("cache hit"), std::string::npos);

    write(tmp.path() / "x.alg", "algebra X { vertices: 1, 2, 3; arrows: a: 1->2, b: 2->3; }\n");
    auto r = call({"--cache-dir", dir, "--verbose", "indecs", tmp.str("x.alg")});
    EXPECT_NE(r.err.find("cache miss"), std::string::npos);
    EXPECT_NE(r.out.find("6 indecomposables"), std::string::npos);
    EXPECT_EQ(entries(dir).size(), 2u);

    r = call({"--cache-dir", dir, "--verbose", "--count-cap", "100", "indecs", tmp.str("x.alg")});
    EXPECT_NE(r.err.find("cache miss"), std::string::npos);
    r = call({"--cache-dir", dir, "--verbose", "--dim-cap", "32", "indecs", tmp.str("x.alg")});
    EXPECT_NE(r.err.find("cache miss"), std::string::npos);
    r = call({"--cache-dir", dir, "--verbose", "--seed", "7", "indecs", tmp.str("x.alg")});
    EXPECT_NE(r.err.find("cache miss"), std::string::npos);
    EXPECT_EQ(entries(dir).size(), 5u);
}

TEST(Cache, NoCacheAndEnvironment) {
    TempDir tmp;
    const std::string dir = tmp.str("cache");
    EXPECT_EQ(call({"--cache-dir", dir, "--no-cache", "indecs", fixture("a2.alg")}).code, 0);
    EXPECT_TRUE(entries(dir).empty());

    const std::string env_dir = tmp.str("env");
    ::setenv("TAUTILT_CACHE", env_dir.c_str(), 1);
    EXPECT_EQ(call({"indecs", fixture("a2.alg")}).code, 0);
    ::unsetenv("TAUTILT_CACHE");
    EXPECT_EQ(entries(env_dir).size(), 1u);

    ::setenv("TAUTILT_SEED", "11", 1);
    const auto r = call({"--cache-dir", env_dir, "--verbose", "indecs", fixture("a2.alg")});
    ::unsetenv("TAUTILT_SEED");
    EXPECT_NE(r.err.find("-s11-"), std::string::npos) << r.err;
}

TEST(Cache, CorruptEntryIsRecomputed) {
    TempDir tmp;
    const std::string dir = tmp.str("cache");
    const auto clean = call({"--cache-dir", dir, "hasse", fixture("a3rel.alg")});
    const auto files = entries(dir);
    ASSERT_EQ(files.size(), 1u);
    const std::string payload = slurp(files.front());

    for (const std::string& junk : {std::string("{not json"), payload.substr(0, payload.size() / 2), std::string("{}")}) {
        write(files.front(), junk);
        const auto r = call({"--cache-dir", dir, "hasse", fixture("a3rel.alg")});
        EXPECT_EQ(r.code, 0);
        EXPECT_NE(r.err.find("corrupt cache entry"), std::string::npos);
        EXPECT_EQ(r.out, clean.out);
        EXPECT_EQ(slurp(files.front()), payload);
    }
}

TEST(Cache, DomainErrorsAreCached) {
    TempDir tmp;
    const std::string dir = tmp.str("cache");
    const auto a = call({"--cache-dir", dir, "--dim-cap", "8", "indecs", fixture("kronecker.alg")});
    const auto b = call({"--cache-dir", dir, "--dim-cap", "8", "--verbose", "indecs", fixture("kronecker.alg")});
    EXPECT_EQ(a.code, 1);
    EXPECT_EQ(b.code, 1);
    EXPECT_NE(b.err.find("cache hit"), std::string::npos);
    EXPECT_NE(b.err.find("not representation-finite within caps"), std::string::npos);
}
