#include <doctest.h>

#include "godeaux/embedded.hpp"
#include "godeaux/scene.hpp"
#include "godeaux/surface.hpp"
#include "util.hpp"

#include <algorithm>

using namespace godeaux;
using testutil::P;

namespace {

Tangent T(const std::string& s) { return Tangent::assigned(parse_form(s)); }

CampedelliConfig camp_config(bool corrupt = false) {
    CampedelliConfig cfg;
    cfg.p0 = P(0, 0, 1);
    cfg.p = {P(1, 0, 1), P(0, 1, 1), P(1, 1, 1), P(2, 3, 1), P(-1, 2, 1)};
    cfg.tangents = {parse_form("x - z"), parse_form("x"), parse_form("x - y"), parse_form("x + y - 5*z"),
                    parse_form("y - 2*z")};
    Scheme s = cfg.curve_scheme();
    if (corrupt) {
        Scheme t;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) t.add(s[i]);
        s = t;
    }
    cfg.components.push_back({"B", 10, s, std::nullopt});
    return cfg;
}

SceneFile z4_scene() { return parse_scene(*embedded_file("scenes/ex-z4.scene")); }

DuValConfig z4_config() {
    SceneFile s = z4_scene();
    return s.duval_config(read_curve_text(*embedded_file("golden/ex-z4-degree12.txt")));
}

DivisorClass random_class(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> c(-4, 4);
    DivisorClass d{c(rng), std::vector<int>(n)};
    for (auto& e : d.e) e = c(rng);
    return d;
}

}  // namespace

TEST_SUITE("surface") {

TEST_CASE("intersection numbers") {
    CHECK(intersect(DivisorClass::hyperplane(0), DivisorClass::hyperplane(0)) == 1);
    CHECK(intersect(DivisorClass::exceptional(3, 1), DivisorClass::exceptional(3, 1)) == -1);
    CHECK(intersect(DivisorClass::canonical(9), DivisorClass::canonical(9)) == 0);
    CHECK_THROWS_AS(intersect(DivisorClass::hyperplane(2), DivisorClass::hyperplane(3)), DomainError);
}

TEST_CASE("intersection is symmetric and bilinear") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 50; ++it) {
        const int n = it % 8;
        DivisorClass a = random_class(rng, n), b = random_class(rng, n), c = random_class(rng, n);
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
        CHECK(intersect(a * 3, b) == 3 * intersect(a, b));
    }
}

TEST_CASE("smooth sextic double plane") {
    Resolution res = canonical_resolution(6, Scheme());
    CHECK(res.chi == 2);
    CHECK(res.K2 == 0);
    CHECK(pg_adjoint(res) == 1);
    CHECK_THROWS_AS(canonical_resolution(5, Scheme()), DomainError);
}

TEST_CASE("Campedelli branch") {
    CampedelliConfig cfg = camp_config();
    Resolution res = canonical_resolution(10, cfg.curve_scheme());
    CHECK(res.chi == 1);
    CHECK(res.K2 == -4);
    CHECK(res.chi_noether == res.chi);
    CHECK(pg_adjoint(res) == 0);
    CHECK(divisor_selfcheck(cfg).passed());
}

TEST_CASE("a dropped [3,3] point breaks evenness") {
    SelfCheckReport r = divisor_selfcheck(camp_config(true));
    CHECK(!r.passed());
    bool even_failed = false;
    for (const auto& c : r.checks)
        if (c.name.find("even") != std::string::npos) even_failed = !c.passed;
    CHECK(even_failed);
}

TEST_CASE("Du Val branch") {
    DuValConfig cfg = z4_config();
    Resolution res = canonical_resolution(14, cfg.branch_scheme());
    CHECK(res.chi == 1);
    CHECK(res.K2 == -4);
    CHECK(res.chi_noether == res.chi);
    CHECK(pg_adjoint(res) == 0);
    // multiplicity 6 at q0: the quartic point plus both lines
    CHECK(res.ledger.m[res.tree.find(cfg.q[0])] == 6);
    CHECK(divisor_selfcheck(cfg).passed());
    CHECK(beauville_tors2(duval_branch_classes(cfg)) == 2);
}

TEST_CASE("resolution does not depend on the order of the points") {
    std::mt19937_64 rng(62);
    Scheme base = camp_config().curve_scheme();
    std::vector<SchemeItem> items = base.items();
    for (int it = 0; it < 6; ++it) {
        std::shuffle(items.begin(), items.end(), rng);
        Scheme s;
        for (const auto& i : items) s.add(i);
        Resolution res = canonical_resolution(10, s);
        CHECK(res.chi == 1);
        CHECK(res.K2 == -4);
        CHECK(pg_adjoint(res) == 0);
    }
}

TEST_CASE("random even branches") {
    std::mt19937_64 rng(63);
    std::uniform_int_distribution<int> c(-4, 4), m(1, 3);
    for (int it = 0; it < 25; ++it) {
        const int d = 2 * (2 + it % 4);
        Scheme s;
        const int n = 1 + it % 5;
        while (static_cast<int>(s.size()) < n) {
            ProjPoint p(Scalar(c(rng)), Scalar(c(rng)), Scalar(1));
            if (s.find(p) < 0) s.add({"p" + std::to_string(s.size()), p, SingChain::ordinary(m(rng))});
        }
        Resolution res = canonical_resolution(d, s);
        CHECK(res.K2 % 2 == 0);
        CHECK(res.chi == res.chi_noether);
        CHECK(res.L * 2 == res.ledger.branch);
    }
}

TEST_CASE("two-torsion of even sets") {
    CHECK(beauville_tors2({DivisorClass{2, {}}}) == 1);
    CHECK(beauville_tors2({DivisorClass{2, {}}, DivisorClass{2, {}}}) == 2);
    CHECK_THROWS_AS(beauville_tors2({DivisorClass{1, {}}}), DomainError);
    // four disjoint (-2)-curves are not even; adding the two they pair with gives one relation
    std::mt19937_64 rng(64);
    for (int it = 0; it < 20; ++it) {
        std::vector<DivisorClass> comps;
        std::uniform_int_distribution<int> k(1, 4);
        const int count = k(rng);
        for (int i = 0; i < count; ++i) comps.push_back(random_class(rng, 3) * 2);
        const int t = beauville_tors2(comps);
        CHECK(t == (1 << (count - 1)));
    }
}

TEST_CASE("torsion of the symmetric example") {
    DuValConfig cfg = z4_config();
    TorsionResult t = duval_torsion(cfg);
    CHECK(t.torsion == Torsion::Z4);
    CHECK(t.dimension == 0);
    REQUIRE(t.solutions.size() == 1);
    PlaneCurve sextic = read_curve_text(*embedded_file("golden/ex-z4-sextic.txt"));
    PlaneCurve expected = sextic * parse_form("y - z") * parse_form("y + z");
    CHECK(t.solutions[0].normalize_integer() == expected.normalize_integer());
    for (const auto& h : t.hypotheses) CHECK_MESSAGE(h.passed, h.name);
}

TEST_CASE("Campedelli obstruction on the symmetric example") {
    CampedelliResult r = campedelli_obstruction(z4_config());
    CHECK(r.verdict == CampedelliVerdict::Inconclusive);
    CHECK(r.factor_count == 2);
    CHECK(r.cubic.degree() == 3);
}

TEST_CASE("the criterion refuses violated hypotheses") {
    SceneFile s = z4_scene();
    // a curve that is not the branch curve
    DuValConfig cfg = s.duval_config(parse_form("x^12 + y^12 + z^12"));
    CHECK_THROWS(duval_torsion(cfg));
}

}
