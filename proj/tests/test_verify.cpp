#include <doctest.h>

#include "godeaux/curve_verify.hpp"
#include "godeaux/linear_system.hpp"
#include "util.hpp"

using namespace godeaux;
using testutil::P;

namespace {

PlaneCurve F(const std::string& s) { return parse_form(s); }

Tangent T(const std::string& s) { return Tangent::assigned(parse_form(s)); }

// Squarefree binary form in x, y of degree n: n absolutely irreducible factors.
PlaneCurve binary_form(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> c(-4, 4);
    for (;;) {
        PlaneCurve f(n);
        for (int i = 0; i <= n; ++i) f.set({i, n - i, 0}, Scalar(c(rng)));
        if (f.is_zero()) continue;
        if (f.coeff({n, 0, 0}).is_zero() && f.coeff({n - 1, 1, 0}).is_zero()) continue;
        // discriminant test via the dehomogenized form in x (the x^n coefficient may vanish: y | f)
        std::vector<Scalar> u(n + 1);
        for (int i = 0; i <= n; ++i) u[i] = f.coeff({i, n - i, 0});
        UniPoly g(u);
        if (g.degree() < n - 1) continue;
        if (gcd(g, derivative(g)).degree() > 0) continue;
        return f;
    }
}

// Conic with nonzero determinant: smooth, hence irreducible.
PlaneCurve smooth_conic(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    for (;;) {
        Rational a = c(rng), b = c(rng), cc = c(rng), d = c(rng), e = c(rng), f = c(rng);
        Matrix m = Matrix::from_rows({{Scalar(2 * a), Scalar(d), Scalar(e)},
                                      {Scalar(d), Scalar(2 * b), Scalar(f)},
                                      {Scalar(e), Scalar(f), Scalar(2 * cc)}});
        if (determinant(m).is_zero()) continue;
        PlaneCurve q(2);
        q.set({2, 0, 0}, Scalar(a));
        q.set({0, 2, 0}, Scalar(b));
        q.set({0, 0, 2}, Scalar(cc));
        q.set({1, 1, 0}, Scalar(d));
        q.set({1, 0, 1}, Scalar(e));
        q.set({0, 1, 1}, Scalar(f));
        return q;
    }
}

PlaneCurve random_line(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-4, 4);
    for (;;) {
        PlaneCurve l = PlaneCurve::linear(Scalar(c(rng)), Scalar(c(rng)), Scalar(c(rng)));
        if (!l.is_zero()) return l;
    }
}

Scheme camp_scheme() {
    Scheme s;
    s.add({"p0", P(0, 0, 1), SingChain::ordinary(4)});
    s.add({"p1", P(1, 0, 1), SingChain({3, 3}, {T("x - z")})});
    s.add({"p2", P(0, 1, 1), SingChain({3, 3}, {T("x")})});
    s.add({"p3", P(1, 1, 1), SingChain({3, 3}, {T("x - y")})});
    s.add({"p4", P(2, 3, 1), SingChain({3, 3}, {T("x + y - 5*z")})});
    s.add({"p5", P(-1, 2, 1), SingChain({3, 3}, {T("y - 2*z")})});
    return s;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("multiplicities") {
    CHECK(multiplicity_at(F("x - y"), P(1, 1, 1)) == 1);
    CHECK(multiplicity_at(F("x^3 - y^2*z"), P(0, 0, 1)) == 2);
    CHECK(multiplicity_at(F("x^2 + y^2 + z^2"), P(1, 0, 0)) == 0);
}

TEST_CASE("chain verdicts") {
    CHECK(chain_verify(F("x*y"), P(0, 0, 1), SingChain::ordinary(2)).verdict == Verdict::Exact);
    PlaneCurve quartic = F("x^4*z^8 - y^4*z^8");
    CHECK(chain_verify(quartic, P(0, 0, 1), SingChain::ordinary(3)).verdict == Verdict::Worse);
    CHECK(chain_verify(quartic, P(0, 0, 1), SingChain::ordinary(4)).verdict == Verdict::Exact);
    CHECK(chain_verify(F("x*y"), P(0, 0, 1), SingChain::ordinary(3)).verdict == Verdict::Insufficient);
    // tacnode y^2 = x^4: [2,2] along y = 0, but not along x = 0
    PlaneCurve tac = F("y^2*z^2 - x^4");
    CHECK(chain_verify(tac, P(0, 0, 1), SingChain({2, 2}, {T("y")})).verdict == Verdict::Exact);
    CHECK(chain_verify(tac, P(0, 0, 1), SingChain({2, 2}, {T("x")})).verdict == Verdict::Insufficient);
    // y^2 = x^6 continues with a third double point: worse than [2,2]
    PlaneCurve osc = F("y^2*z^4 - x^6");
    CHECK(chain_verify(osc, P(0, 0, 1), SingChain({2, 2}, {T("y")})).verdict == Verdict::Worse);
}

TEST_CASE("EXACT implies membership in the condition kernel") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> c(-3, 3), m(1, 3);
    int exact = 0;
    for (int it = 0; it < 40; ++it) {
        const int d = 4 + it % 3;
        const int m1 = m(rng), m2 = std::min(m1, m(rng));
        ProjPoint p(Scalar(c(rng)), Scalar(c(rng)), Scalar(1));
        PlaneCurve line = PlaneCurve::linear(Scalar(c(rng)), Scalar(1), Scalar(0));
        line = line + PlaneCurve::linear(Scalar(0), Scalar(0), -line.evaluate(p.coords()));
        SingChain ch = it % 2 ? SingChain({m1, m2}, {Tangent::assigned(line)}) : SingChain::ordinary(m1);
        Matrix cond = conditions(d, p, ch);
        PlaneCurve f(d);
        for (const auto& v : kernel_basis(cond)) f = f + PlaneCurve::from_vector(d, v) * Scalar(c(rng));
        if (f.is_zero()) continue;
        auto rep = chain_verify(f, p, ch);
        if (rep.verdict != Verdict::Exact) continue;
        ++exact;
        Vector v = f.to_vector();
        for (int i = 0; i < cond.rows(); ++i) CHECK(dot(cond.row(i), v).is_zero());
    }
    CHECK(exact > 10);
}

TEST_CASE("multiplicity is projectively invariant") {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int it = 0; it < 20; ++it) {
        ProjPoint p(Scalar(c(rng)), Scalar(c(rng)), Scalar(1));
        Scheme s;
        s.add({"p", p, SingChain::ordinary(1 + it % 3)});
        auto sols = solve_basis(assemble(4, s));
        PlaneCurve f = sols[it % sols.size()];
        Matrix A = testutil::random_invertible(rng, 2);
        ProjPoint q(point_apply(inverse(A), p.coords()));
        CHECK(multiplicity_at(f.substitute(A), q) == multiplicity_at(f, p));
    }
}

TEST_CASE("squarefree test") {
    CHECK(is_squarefree(F("x*y - z^2")));
    CHECK(!is_squarefree(F("x^2*y")));
    CHECK(!is_squarefree(F("x^3 - 2*x^2*y + x*y^2 + x^2*z - 2*x*y*z + y^2*z")));
}

TEST_CASE("singular scan") {
    CHECK(singular_locus_scan(F("x*z - y^2")).empty());
    auto nodal = singular_locus_scan(F("y^2*z - x^3 - x^2*z"));
    REQUIRE(nodal.size() == 1);
    REQUIRE(nodal[0].located());
    CHECK(nodal[0].point == P(0, 0, 1));
    CHECK(nodal[0].multiplicity == 2);
    // two conics meeting in four points, two of them irrational
    auto pair = singular_locus_scan(F("x^2 - 2*y^2 + z^2") * F("x^2 + y^2 - 4*z^2"));
    int located = 0, symbolic = 0;
    for (const auto& c : pair) (c.located() ? located : symbolic) += 1;
    CHECK(located + symbolic > 0);
}

TEST_CASE("scan of a solved curve finds the scheme points") {
    Scheme s;
    s.add({"a", P(0, 0, 1), SingChain::ordinary(2)});
    s.add({"b", P(1, 0, 0), SingChain::ordinary(2)});
    s.add({"c", P(0, 1, 0), SingChain::ordinary(2)});
    s.add({"d", P(1, 1, 1), SingChain::ordinary(2)});
    s.add({"e", P(2, -1, 1), SingChain::ordinary(1)});
    s.add({"f", P(3, 5, 1), SingChain::ordinary(1)});
    auto ls = assemble(4, s);
    REQUIRE(dimension(ls) == 0);
    PlaneCurve f = solve_unique(ls);
    REQUIRE(is_squarefree(f));
    auto scan = singular_locus_scan(f);
    for (const auto& item : s.items()) {
        if (item.chain.multiplicities()[0] < 2) continue;
        bool found = false;
        for (const auto& c : scan)
            if (c.located() && c.point == item.point) found = true;
        CHECK(found);
    }
}

TEST_CASE("absolute factor counts") {
    CHECK(absolute_factor_count(F("x*y")) == 2);
    CHECK(absolute_factor_count(F("x^2 - 2*y^2")) == 2);
    CHECK(absolute_factor_count(F("x^2 + y^2 - z^2")) == 1);
    CHECK(absolute_factor_count(F("y^2*z - x^3 - x*z^2")) == 1);
    CHECK(absolute_factor_count(F("x^3 - 2*y^3")) == 3);
    FactorCountOptions exact;
    exact.allow_modp_certificate = false;
    CHECK(absolute_factor_count(F("x^2 - 2*y^2"), exact) == 2);
}

TEST_CASE("factor counts of constructed products") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> pick(0, 2);
    int tested = 0;
    for (int it = 0; it < 30; ++it) {
        PlaneCurve f(0);
        f.set({0, 0, 0}, Scalar(1));
        int expected = 0, degree = 0;
        std::vector<std::pair<PlaneCurve, int>> parts;
        while (degree < 3) {
            const int kind = pick(rng);
            if (kind == 0 && degree <= 2) {
                parts.emplace_back(binary_form(rng, 2), 2);
                degree += 2;
            } else if (kind == 1 && degree <= 2) {
                parts.emplace_back(smooth_conic(rng), 1);
                degree += 2;
            } else {
                parts.emplace_back(random_line(rng), 1);
                degree += 1;
            }
        }
        for (const auto& [g, n] : parts) {
            f = f * g;
            expected += n;
        }
        if (!is_squarefree(f)) continue;
        ++tested;
        CHECK(absolute_factor_count(f) == expected);
        // additivity over a coprime split
        PlaneCurve a = parts[0].first, b = divide_exact(f, a);
        CHECK(absolute_factor_count(a) + absolute_factor_count(b) == expected);
    }
    CHECK(tested > 15);
}

TEST_CASE("binary forms split completely") {
    std::mt19937_64 rng(54);
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k < 3; ++k) CHECK(absolute_factor_count(binary_form(rng, n)) == n);
}

TEST_CASE("geometric genus") {
    Scheme duval;
    duval.add({"q0", P(0, 0, 1), SingChain::ordinary(4)});
    duval.add({"q1", P(1, 1, 1), SingChain({4, 4}, {T("x - y")})});
    duval.add({"q2", P(1, -1, 1), SingChain({4, 4}, {T("x + y")})});
    duval.add({"q3", P(1, 0, 0), SingChain::ordinary(4)});
    duval.add({"q4", P(0, 1, 1), SingChain::ordinary(4)});
    duval.add({"q5", P(0, -1, 1), SingChain::ordinary(4)});
    duval.add({"q6", P(-2, 0, 1), SingChain({3, 3}, {T("x + 2*z")})});
    CHECK(geometric_genus(12, duval) == 1);
    CHECK(geometric_genus(10, camp_scheme()) == 0);
    CHECK(geometric_genus(2, Scheme()) == 0);
    CHECK(geometric_genus(3, Scheme()) == 1);
    CHECK_THROWS_AS(geometric_genus(4, duval), DomainError);
}

}
