#include <doctest.h>

#include "godeaux/linear_system.hpp"
#include "util.hpp"

using namespace godeaux;
using testutil::P;

namespace {

Tangent T(const std::string& s) { return Tangent::assigned(parse_form(s)); }

Matrix diag(long a, long b, long c) {
    Matrix m(3, 3);
    m.set(0, 0, Scalar(a));
    m.set(1, 1, Scalar(b));
    m.set(2, 2, Scalar(c));
    return m;
}

Scheme z4_representatives() {
    Scheme s;
    s.add({"q0", P(0, 0, 1), SingChain::ordinary(4)});
    s.add({"q1", P(1, 1, 1), SingChain({4, 4}, {T("x - y")})});
    s.add({"q3", P(1, 0, 0), SingChain::ordinary(4)});
    s.add({"q4", P(0, 1, 1), SingChain::ordinary(4)});
    s.add({"q6", P(-2, 0, 1), SingChain({3, 3}, {T("x + 2*z")})});
    return s;
}

Scheme six_points() {
    Scheme s;
    const long pts[6][3] = {{1, 1, 1}, {1, -1, 1}, {1, 0, 0}, {0, 1, 1}, {0, -1, 1}, {-2, 0, 1}};
    for (int i = 0; i < 6; ++i)
        s.add({"q" + std::to_string(i + 1), P(pts[i][0], pts[i][1], pts[i][2]), SingChain::ordinary(1)});
    return s;
}

}  // namespace

TEST_SUITE("linear") {

TEST_CASE("assembly shapes") {
    auto ls = assemble(12, z4_representatives(), Symmetry{ProjInvolution(diag(1, -1, 1)), true});
    CHECK(ls.matrix.cols() == 49);
    CHECK(ls.full_scheme.size() == 7);
    auto conics = assemble(2, six_points());
    CHECK(conics.matrix.rows() == 6);
    CHECK(conics.matrix.cols() == 6);
    Scheme one;
    one.add({"p", P(0, 0, 1), SingChain::ordinary(1)});
    auto lines = assemble(1, one);
    CHECK(lines.matrix.rows() == 1);
    CHECK(lines.matrix.cols() == 3);
}

TEST_CASE("dimensions and solutions") {
    auto conics = assemble(2, six_points());
    CHECK(dimension(conics) == -1);
    CHECK(solve_basis(conics).empty());
    CHECK(dimension_mod_p(conics, 101) == -1);

    Scheme one;
    one.add({"p", P(0, 0, 1), SingChain::ordinary(1)});
    auto basis = solve_basis(assemble(1, one));
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == parse_form("x"));
    CHECK(basis[1] == parse_form("y"));
}

TEST_CASE("the symmetric degree-12 system") {
    auto ls = assemble(12, z4_representatives(), Symmetry{ProjInvolution(diag(1, -1, 1)), true});
    CHECK(dimension(ls) == 0);
    CHECK(dimension_mod_p(ls, 1000003) == 0);
    PlaneCurve f = solve_unique(ls);
    CHECK(f.term_count() == 37);
    CHECK(f.coeff({8, 4, 0}) == Scalar(15625));
    CHECK(f.coeff({8, 0, 4}) == Scalar(81289));
    CHECK(f.coeff({7, 4, 1}) == Scalar(604400));
    CHECK(f.coeff({0, 12, 0}) == Scalar(-810000));
}

TEST_CASE("the system without the q4 item has dimension 8") {
    Scheme s;
    s.add({"q0", P(0, 0, 1), SingChain::ordinary(4)});
    s.add({"q1", P(1, 1, 1), SingChain({4, 4}, {T("x - y")})});
    s.add({"q2", P(1, -1, 1), SingChain({4, 4}, {T("x + y")})});
    s.add({"q3", P(1, 0, 0), SingChain::ordinary(4)});
    s.add({"q5", P(0, -1, 1), SingChain::ordinary(4)});
    s.add({"q6", P(-2, 0, 1), SingChain({3, 3}, {T("x + 2*z")})});
    auto ls = assemble(12, s);
    CHECK(dimension(ls) == 8);
    CHECK(virtual_dimension(12, s) == 8);
    CHECK_THROWS_AS(solve_unique(ls), ContractError);
}

TEST_CASE("solutions satisfy every condition") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> c(-3, 3), m(1, 3);
    for (int it = 0; it < 15; ++it) {
        Scheme s;
        while (s.size() < 3) {
            ProjPoint p(Scalar(c(rng)), Scalar(c(rng)), Scalar(1));
            if (s.find(p) < 0) s.add({"p" + std::to_string(s.size()), p, SingChain::ordinary(m(rng))});
        }
        const int d = 3 + it % 4;
        auto ls = assemble(d, s);
        for (const auto& f : solve_basis(ls)) {
            Vector v = f.to_vector();
            for (int i = 0; i < ls.matrix.rows(); ++i) CHECK(dot(ls.matrix.row(i), v).is_zero());
        }
        auto bound = dimension_mod_p(ls, 7);
        REQUIRE(bound.has_value());
        CHECK(*bound >= dimension(ls));
    }
}

TEST_CASE("eigenspaces split the kernel of a stable scheme") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> c(-3, 3), m(1, 3);
    ProjInvolution phi(diag(1, -1, 1));
    for (int it = 0; it < 12; ++it) {
        Scheme s;
        while (s.size() < 4) {
            const long a = c(rng), b = 1 + (c(rng) + 3) % 3;
            ProjPoint p(Scalar(a), Scalar(b), Scalar(1)), q(Scalar(a), Scalar(-b), Scalar(1));
            if (s.find(p) >= 0) continue;
            const int mult = m(rng);
            if (it % 2) {
                PlaneCurve line = PlaneCurve::linear(Scalar(c(rng)), Scalar(1), Scalar(0));
                line = line + PlaneCurve::linear(Scalar(0), Scalar(0), -line.evaluate(p.coords()));
                s.add({"p" + std::to_string(s.size()), p, SingChain({mult, mult}, {Tangent::assigned(line)})});
                s.add({"p" + std::to_string(s.size()), q,
                       SingChain({mult, mult}, {Tangent::assigned(phi.act(line))})});
            } else {
                s.add({"p" + std::to_string(s.size()), p, SingChain::ordinary(mult)});
                s.add({"p" + std::to_string(s.size()), q, SingChain::ordinary(mult)});
            }
        }
        const int d = 5 + it % 3;
        const int full = dimension(assemble(d, s));
        const int plus = dimension(assemble(d, s, Symmetry{phi, true}));
        const int minus = dimension(assemble(d, s, Symmetry{phi, false}));
        CHECK((plus + 1) + (minus + 1) == full + 1);
    }
}

TEST_CASE("a listed image must carry the image chain") {
    Scheme s;
    s.add({"a", P(1, 1, 1), SingChain::ordinary(2)});
    s.add({"b", P(1, -1, 1), SingChain::ordinary(3)});
    CHECK_THROWS_AS(assemble(6, s, Symmetry{ProjInvolution(diag(1, -1, 1)), true}), DomainError);
}

TEST_CASE("rank drop locus of a toy family") {
    // conics through [+-1, +-1, 1] with a node at [t, 0, 1]
    ParamScheme ps;
    ps.fixed.add({"a", P(1, 1, 1), SingChain::ordinary(1)});
    ps.fixed.add({"b", P(1, -1, 1), SingChain::ordinary(1)});
    ps.fixed.add({"c", P(-1, 1, 1), SingChain::ordinary(1)});
    ps.fixed.add({"d", P(-1, -1, 1), SingChain::ordinary(1)});
    ps.name = "n";
    ps.base = {Scalar(0), Scalar(0), Scalar(1)};
    ps.coord = 0;
    ps.chain = SingChain::ordinary(2);
    auto res = rank_drop_locus(2, ps);
    CHECK(!res.everything);
    UniPoly proper = res.proper_locus();
    REQUIRE(proper.degree() == 1);
    CHECK(proper.eval(Scalar(0)).is_zero());
    auto sols = solve_basis(assemble(2, ps.at(Scalar(0))));
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == parse_form("x^2 - y^2"));
    for (const auto& f : res.factors)
        if (f.certified) CHECK(f.dimension >= 0);
}

TEST_CASE("a family solvable everywhere") {
    ParamScheme ps;
    ps.fixed.add({"a", P(0, 1, 0), SingChain::ordinary(1)});
    ps.name = "n";
    ps.base = {Scalar(0), Scalar(0), Scalar(1)};
    ps.coord = 0;
    ps.chain = SingChain::ordinary(2);
    auto res = rank_drop_locus(2, ps);
    CHECK(res.everything);
}

TEST_CASE("moving the quadruple point along y = z") {
    ParamScheme ps;
    ps.fixed.add({"q0", P(0, 0, 1), SingChain::ordinary(4)});
    ps.fixed.add({"q1", P(1, 1, 1), SingChain({4, 4}, {T("x - y")})});
    ps.fixed.add({"q2", P(1, -1, 1), SingChain({4, 4}, {T("x + y")})});
    ps.fixed.add({"q3", P(1, 0, 0), SingChain::ordinary(4)});
    ps.fixed.add({"q5", P(0, -1, 1), SingChain::ordinary(4)});
    ps.fixed.add({"q6", P(-2, 0, 1), SingChain({3, 3}, {T("x + 2*z")})});
    ps.name = "q4";
    ps.base = {Scalar(0), Scalar(1), Scalar(1)};
    ps.coord = 0;
    ps.chain = SingChain::ordinary(4);
    auto res = rank_drop_locus(12, ps);
    CHECK(!res.everything);
    // only the known position [0, 1, 1] survives
    UniPoly proper = res.proper_locus();
    CHECK(proper.degree() == 1);
    CHECK(proper.eval(Scalar(0)).is_zero());
}

}
