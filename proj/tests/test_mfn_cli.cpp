#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "iterroot/cli.hpp"
#include "iterroot/instances.hpp"
#include "iterroot/mfn_format.hpp"

using namespace iterroot;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("iterroot-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".mfn"))
                    .string();
        std::ofstream(path_, std::ios::binary) << text;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

std::string parse_error(const std::string& text) {
    try {
        parse_mfn(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(Mfn, ParsesSetValuePoint) {
    auto v = parse_mfn("points a b\na -> b\nb -> a b");
    auto f = std::get<Multifunction>(v);
    EXPECT_EQ(f.size(), 2u);
    EXPECT_EQ(f(1).size(), 2u);
}

TEST(Mfn, CommentsAndEmptyImages) {
    auto f = std::get<Multifunction>(parse_mfn("# header\n\npoints a b c  # three\na -> b\nb ->\n"));
    EXPECT_TRUE(f(1).empty());
    EXPECT_TRUE(f(2).empty());
    EXPECT_EQ(serialize(f), "points a b c\na -> b\n");
}

TEST(Mfn, Errors) {
    EXPECT_EQ(parse_error("points a\na -> b"), "undeclared label b at line 2");
    EXPECT_EQ(parse_error("points a a"), "duplicate label a at line 1");
    EXPECT_EQ(parse_error("points a b\na -> b\na -> a"), "duplicate source line for a at line 3");
    EXPECT_EQ(parse_error("a -> b"), "expected 'points' declaration at line 1");
    EXPECT_EQ(parse_error("points a b\nkind single\na -> a b"), "kind single requires exactly one target for a at line 3");
    EXPECT_EQ(parse_error("points a b\nkind single\na -> a"), "kind single requires an image for b at line 3");
    EXPECT_EQ(parse_error("points a b\na -> a\nkind single"), "kind declaration after edge lines at line 3");
    EXPECT_EQ(parse_error(""), "missing 'points' declaration at line 1");
}

TEST(Mfn, SingleKind) {
    auto v = parse_mfn("points a b\nkind single\na -> b\nb -> b\n");
    ASSERT_TRUE(std::holds_alternative<SingleMap>(v));
    EXPECT_EQ(serialize(v), "points a b\nkind single\na -> b\nb -> b\n");
}

TEST(Mfn, IdentitySerialization) {
    EXPECT_EQ(serialize(Multifunction::identity(GroundSet({"a"}))), "points a\na -> a\n");
}

TEST(Mfn, RoundTrip) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto f = instances::random_multifunction(1 + seed % 9, 4, 0.3, seed);
        const auto text = serialize(f);
        EXPECT_EQ(std::get<Multifunction>(parse_mfn(text)), f);
        EXPECT_EQ(serialize(parse_mfn(text)), text);
        auto m = instances::random_map(1 + seed % 9, seed);
        EXPECT_EQ(std::get<SingleMap>(parse_mfn(serialize(m))), m);
    }
}

TEST(Mfn, Tails20Golden) {
    EXPECT_EQ(serialize(instances::tails20_g()), read_file(ITERROOT_GOLDEN_DIR "/tails20-g.mfn"));
}

TEST(Cli, CheckExitCodes) {
    TempFile f1(serialize(instances::f1()));
    auto fires = run({"check", f1.path(), "--M", "2"});
    EXPECT_EQ(fires.code, 0);
    EXPECT_NE(fires.out.find("forward-paths x0=x0"), std::string::npos);
    auto single = run({"check", f1.path(), "--M", "2", "--N", "1", "--x0", "x0", "--rule", "forward-points"});
    EXPECT_EQ(single.code, 1);
    EXPECT_NE(single.out.find("not-applicable"), std::string::npos);
    EXPECT_EQ(run({"check", "/nonexistent/file.mfn"}).code, 2);
    EXPECT_EQ(run({"check", f1.path(), "--rule", "bogus"}).code, 2);
    EXPECT_EQ(run({"check", f1.path(), "--x0", "nowhere"}).code, 2);
}

TEST(Cli, CheckJson) {
    TempFile f2(serialize(instances::f2()));
    auto r = run({"check", f2.path(), "--M", "2", "--json"});
    EXPECT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_TRUE(j["fires"].get<bool>());
    ASSERT_EQ(j["certificates"].size(), 2u);
    EXPECT_EQ(j["certificates"][0]["rule"], "forward-paths");
    EXPECT_EQ(j["certificates"][0]["Q"], "3");
    EXPECT_EQ(j["certificates"][0]["conclusion"], "no-roots-at-all");
}

TEST(Cli, SearchExitCodes) {
    TempFile fig(serialize(instances::tails20_f()));
    auto found = run({"search", fig.path(), "--order", "4"});
    EXPECT_EQ(found.code, 0);
    auto root = std::get<SingleMap>(parse_mfn(found.out));
    EXPECT_EQ(iterate(root, 4), instances::tails20_f());

    TempFile cycle("points a b c d\nkind single\na -> b\nb -> c\nc -> d\nd -> a\n");
    EXPECT_EQ(run({"search", cycle.path(), "--order", "2"}).code, 1);

    TempFile mf(serialize(instances::random_multifunction(5, 5, 0.4, 3)));
    EXPECT_EQ(run({"search", mf.path(), "--order", "3", "--budget", "1"}).code, 3);
    EXPECT_EQ(run({"search", mf.path(), "--order", "3", "--max-out", "1", "--max-in", "1"}).code, 2);
    EXPECT_EQ(run({"search", fig.path(), "--order", "4", "--max-out", "1"}).code, 2);
}

TEST(Cli, Transformations) {
    TempFile f("points a b c\na -> b\nb -> c a\n");
    EXPECT_EQ(run({"iterate", f.path(), "--order", "2"}).out, "points a b c\na -> a c\nb -> b\n");
    EXPECT_EQ(run({"invert", f.path()}).out, "points a b c\na -> b\nb -> a\nc -> b\n");
    EXPECT_EQ(run({"paths", f.path(), "--from", "*", "--to", "a,c", "--length", "3"}).out, "2\n");
    auto p = run({"pullback", f.path()});
    EXPECT_EQ(p.code, 1);
    EXPECT_EQ(p.out, "# not a pullback: fails totality\n");

    TempFile m("points a b c\nkind single\na -> b\nb -> b\nc -> a\n");
    EXPECT_EQ(run({"pullback", m.path()}).out, "points a b c\na -> c\nb -> a b\n");
}

TEST(Cli, FixedPointsPolySolar) {
    TempFile fig(serialize(instances::tails20_f()));
    auto fp = run({"fixedpoints", fig.path()});
    EXPECT_EQ(fp.code, 0);
    EXPECT_NE(fp.out.find("rice-lemma: excludes n > 8"), std::string::npos);
    EXPECT_NE(fp.out.find("non-isolated-fixed-points: excludes n > 2 with no divisor in [2, 4]"), std::string::npos);
    EXPECT_EQ(run({"solar", "--count", "3"}).out, "2,3,6\n");
    auto poly = run({"poly", "--coeffs", "0,0,0,0,1", "--order", "2"});
    EXPECT_EQ(poly.out, "degree 4, order 2\nno findings\n");
    EXPECT_EQ(run({"poly", "--coeffs", "0,0,x", "--order", "2"}).code, 2);
}

TEST(Cli, InstanceCommand) {
    auto r = run({"instance", "tails20-g"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, serialize(instances::tails20_g()));
    auto a = run({"instance", "random-mf", "--size", "5", "--seed", "7"});
    EXPECT_EQ(a.out, run({"instance", "random-mf", "--size", "5", "--seed", "7"}).out);
    EXPECT_EQ(run({"instance", "cyclic-power", "--modulus", "4", "--exponent", "3", "--variant", "mul"}).out,
              "points 0 1 2 3\nkind single\n0 -> 0\n1 -> 3\n2 -> 2\n3 -> 1\n");
    EXPECT_EQ(run({"instance", "unknown"}).code, 2);
}
