#include <doctest.h>

#include "godeaux/commands.hpp"
#include "godeaux/embedded.hpp"
#include "godeaux/scene.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace godeaux;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "godeaux");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<SceneIssue> issues_of(const std::string& text) {
    try {
        parse_scene(text);
    } catch (const SceneError& e) {
        return e.issues();
    }
    return {};
}

const char* kHeader = "field rational\npoint q0 = [0, 0, 1]\npoint q1 = [1, 1, 1]\n";

}  // namespace

TEST_SUITE("scene") {

TEST_CASE("the shipped scenes parse") {
    for (const auto& name : embedded_names()) {
        if (name.rfind("scenes/", 0) != 0) continue;
        CAPTURE(name);
        CHECK_NOTHROW(parse_scene(*embedded_file(name)));
    }
    SceneFile z4 = parse_scene(*embedded_file("scenes/ex-z4.scene"));
    CHECK(z4.sings.size() == 5);
    CHECK(z4.scheme().size() == 5);
    CHECK(z4.full_scheme().size() == 7);
    CHECK(z4.degree == 12);
}

TEST_CASE("errors carry line numbers") {
    auto undeclared = issues_of(std::string(kHeader) + "sing q9 mult 4\n");
    REQUIRE(undeclared.size() == 1);
    CHECK(undeclared[0].line == 4);
    CHECK(undeclared[0].message.find("q9") != std::string::npos);

    auto off_line = issues_of(std::string(kHeader) + "line r1 = x - y\nsing q0 chain [4,4] tangent r1\n");
    CHECK(off_line.empty());  // q0 = [0,0,1] lies on x = y
    auto off = issues_of(std::string(kHeader) + "line r1 = x - z\nsing q0 chain [4,4] tangent r1\n");
    REQUIRE(off.size() == 1);
    CHECK(off[0].line == 5);

    auto many = issues_of(std::string(kHeader) + "point q2 = [1/0, 1, 1]\nfrobnicate\nsing q1 mult x\n");
    REQUIRE(many.size() == 3);
    CHECK(many[0].line == 4);
    CHECK(many[1].line == 5);
    CHECK(many[2].line == 6);
}

TEST_CASE("round trip") {
    for (const auto& name : embedded_names()) {
        if (name.rfind("scenes/", 0) != 0) continue;
        CAPTURE(name);
        SceneFile s = parse_scene(*embedded_file(name));
        CHECK(parse_scene(write_scene(s)) == s);
        CHECK(write_scene(parse_scene(write_scene(s))) == write_scene(s));
    }
    SceneFile d11 = parse_scene(*embedded_file("scenes/ex-deg11.scene"));
    SceneFile k = d11.specialize({Rational(-2), Rational(0), Rational(1)});
    CHECK(parse_scene(write_scene(k)) == k);
}

TEST_CASE("exit codes and canonical text") {
    Run dim = cli({"dim", "builtin:ex-z4"});
    CHECK(dim.code == 0);
    CHECK(dim.out.rfind("dimension 0\n", 0) == 0);

    Run conics = cli({"solve", "builtin:conics-6pts"});
    CHECK(conics.code == 1);
    CHECK(conics.out.find("empty (dimension -1)") != std::string::npos);
    CHECK(cli({"dim", "builtin:conics-6pts", "--modp", "101"}).code == 1);

    Run inv = cli({"invariants", "builtin:duval"});
    CHECK(inv.code == 0);
    CHECK(inv.out.find("chi 1, Ksq_cover -4") != std::string::npos);

    CHECK(cli({}).code == 2);
    CHECK(cli({"dim"}).code == 2);
    CHECK(cli({"dim", "/nonexistent.scene"}).code == 2);
    CHECK(cli({"dim", "builtin:nothing"}).code == 2);
    CHECK(cli({"reproduce", "ex-nothing"}).code == 2);
    CHECK(cli({"dim", "builtin:ex-z4", "--eigenspace", "sideways"}).code == 2);
}

TEST_CASE("json reports") {
    Run r = cli({"dim", "builtin:conics-6pts", "--json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["task"] == "dim");
    CHECK(j["status"] == "negative");
    CHECK(j["data"]["dimension"] == -1);
    CHECK(j.contains("witnesses"));
    Run bad = cli({"dim", "builtin:nothing", "--json"});
    CHECK(bad.code == 2);
    CHECK(nlohmann::json::parse(bad.out)["status"] == "error");
}

TEST_CASE("reports do not depend on the thread count") {
    Run a = cli({"locus", "builtin:ex-deg11", "--threads", "1"});
    Run b = cli({"locus", "builtin:ex-deg11", "--threads", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("p(t): degree 15 = 5 + 10") != std::string::npos);
    CHECK(cli({"dim", "builtin:ex-z4", "--json"}).out == cli({"dim", "builtin:ex-z4", "--json", "--threads", "2"}).out);
}

TEST_CASE("verify with an explicit curve") {
    Run ok = cli({"verify", "builtin:ex-z4", "--quick"});
    CHECK(ok.code == 0);
    const std::string path = std::filesystem::temp_directory_path() / "godeaux-test-conic.txt";
    {
        std::ofstream f(path);
        f << write_curve_text(parse_form("x^2 + y^2 - z^2"));
    }
    // a curve that misses the scheme is a mathematical negative
    Run miss = cli({"verify", "builtin:conics-6pts", "--curve", path, "--quick"});
    CHECK(miss.code == 1);
    std::filesystem::remove(path);
    CHECK(cli({"verify", "builtin:conics-6pts", "--curve", "/nonexistent.txt"}).code == 2);
}

}
