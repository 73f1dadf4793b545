#include <doctest.h>

#include "godeaux/curve_verify.hpp"
#include "godeaux/linear_system.hpp"
#include "godeaux/scheme.hpp"
#include "util.hpp"

#include <algorithm>

using namespace godeaux;
using testutil::P;

namespace {

PlaneCurve F(const std::string& s) { return parse_form(s); }

Tangent T(const std::string& s) { return Tangent::assigned(parse_form(s)); }

bool in_kernel(const Matrix& m, const PlaneCurve& f) {
    Vector v = f.to_vector();
    for (int i = 0; i < m.rows(); ++i)
        if (!dot(m.row(i), v).is_zero()) return false;
    return true;
}

// Brute force: move p = (a, b) to the origin with the tangent direction (1, k)
// on the axis w = 0, blow up in the chart w = s*w1 and read off orders.
bool oracle(const PlaneCurve& f, const Rational& a, const Rational& b, const Rational& k,
            const std::vector<int>& chain) {
    Matrix A = Matrix::identity(3);
    A.set(0, 2, Scalar(a));
    A.set(1, 0, Scalar(k));
    A.set(1, 2, Scalar(b));
    BiPoly g = f.substitute(A).dehomogenize(2);
    const int m1 = chain[0];
    for (const auto& [e, c] : g.terms()) {
        const int i = e.first, j = e.second;
        if (i + j < m1) return false;
        if (chain.size() > 1 && (i + j - m1) + j < chain[1]) return false;
    }
    return true;
}

// Curves through (a, b) built from local monomials s^i w^j that satisfy the chain.
PlaneCurve oracle_member(std::mt19937_64& rng, int d, const Rational& a, const Rational& b, const Rational& k,
                         const std::vector<int>& chain) {
    std::uniform_int_distribution<int> c(-3, 3);
    Matrix Ainv = Matrix::identity(3);
    Ainv.set(0, 2, Scalar(-a));
    Ainv.set(1, 0, Scalar(-k));
    Ainv.set(1, 2, Scalar(k * a - b));
    PlaneCurve g(d);
    const int m1 = chain[0], m2 = chain.size() > 1 ? chain[1] : 0;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j)
            if (i + j >= m1 && i + 2 * j >= m1 + m2) g.set({i, j, d - i - j}, Scalar(c(rng)));
    return g.substitute(Ainv);
}

Scheme random_scheme(std::mt19937_64& rng, int items) {
    std::uniform_int_distribution<int> c(-3, 3), m(1, 3);
    Scheme s;
    while (static_cast<int>(s.size()) < items) {
        ProjPoint p(Scalar(c(rng)), Scalar(c(rng)), Scalar(1));
        if (s.find(p) >= 0) continue;
        int m1 = m(rng);
        if (c(rng) > 0) {
            int m2 = std::min(m1, m(rng));
            PlaneCurve line = PlaneCurve::linear(Scalar(c(rng)), Scalar(1), Scalar(0));
            Scalar off = -line.evaluate(p.coords());
            line = line + PlaneCurve::linear(Scalar(0), Scalar(0), off);
            s.add({"p" + std::to_string(s.size()), p, SingChain({m1, m2}, {Tangent::assigned(line)})});
        } else {
            s.add({"p" + std::to_string(s.size()), p, SingChain::ordinary(m1)});
        }
    }
    return s;
}

}  // namespace

TEST_SUITE("scheme") {

TEST_CASE("condition counts") {
    CHECK(expected_conditions(SingChain::ordinary(4)) == 10);
    CHECK(expected_conditions(SingChain({4, 4}, {T("y")})) == 20);
    CHECK(expected_conditions(SingChain({3, 3}, {T("y")})) == 12);
    CHECK(conditions(12, P(1, 2, 1), SingChain::ordinary(4)).rows() == 10);
    CHECK(conditions(12, P(-2, 0, 1), SingChain({3, 3}, {T("x + 2*z")})).rows() == 12);
    CHECK(conditions(3, P(1, 0, 0), SingChain::ordinary(1)).rows() == 1);
}

TEST_CASE("chain validation") {
    CHECK_THROWS_AS(SingChain({2, 3}, {T("y")}), DomainError);
    CHECK_THROWS_AS(SingChain({0}), DomainError);
    CHECK_THROWS_AS(SingChain({2, 2, 2}, {T("y"), T("y")}), DomainError);
    CHECK_THROWS_AS(conditions(6, P(1, 1, 1), SingChain({2, 2}, {T("x + y")})), DomainError);
    Scheme s;
    s.add({"a", P(1, 1, 1), SingChain::ordinary(2)});
    CHECK_THROWS_AS(s.add({"b", P(2, 2, 2), SingChain::ordinary(2)}), DomainError);
}

TEST_CASE("virtual dimensions") {
    Scheme duval;
    duval.add({"q0", P(0, 0, 1), SingChain::ordinary(4)});
    duval.add({"q1", P(1, 1, 1), SingChain({4, 4}, {T("x - y")})});
    duval.add({"q2", P(1, -1, 1), SingChain({4, 4}, {T("x + y")})});
    duval.add({"q3", P(1, 0, 0), SingChain::ordinary(4)});
    duval.add({"q4", P(0, 1, 1), SingChain::ordinary(4)});
    duval.add({"q5", P(0, -1, 1), SingChain::ordinary(4)});
    duval.add({"q6", P(-2, 0, 1), SingChain({3, 3}, {T("x + 2*z")})});
    CHECK(virtual_dimension(12, duval) == -2);

    Scheme d11;
    d11.add({"q0", P(0, 0, 1), SingChain::ordinary(3)});
    d11.add({"q1", P(1, 1, 1), SingChain({4, 4}, {T("x - y")})});
    d11.add({"q2", P(1, -1, 1), SingChain({4, 4}, {T("x + y")})});
    d11.add({"q3", P(1, 0, 0), SingChain::ordinary(3)});
    d11.add({"q4", P(0, 1, 1), SingChain::ordinary(4)});
    d11.add({"q5", P(0, -1, 1), SingChain::ordinary(4)});
    d11.add({"q6", P(3, 0, 1), SingChain({2, 2}, {T("x - 3*z")})});
    CHECK(virtual_dimension(11, d11) == -1);

    Scheme six;
    for (int i = 0; i < 6; ++i) six.add({"q" + std::to_string(i), P(i, i * i, 1), SingChain::ordinary(1)});
    CHECK(virtual_dimension(2, six) == -1);
}

TEST_CASE("local frames") {
    const std::vector<std::pair<ProjPoint, std::string>> cases{
        {P(0, 0, 1), "y"}, {P(1, 0, 0), "z"}, {P(1, 1, 1), "x - y"}, {P(0, 1, 0), "x + 2*z"}};
    for (const auto& [p, line] : cases) {
        Tangent t = T(line);
        Matrix A = local_frame(p, &t);
        Point3 img = point_apply(A, {Scalar(0), Scalar(0), Scalar(1)});
        CHECK(ProjPoint(img) == p);
        // the pulled-back tangent is v = 0
        PlaneCurve back = t.line.substitute(A);
        CHECK(back.coeff({1, 0, 0}).is_zero());
        CHECK(back.coeff({0, 0, 1}).is_zero());
        CHECK(!back.coeff({0, 1, 0}).is_zero());
    }
}

TEST_CASE("ordinary conditions equal vanishing partials") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int it = 0; it < 20; ++it) {
        const int d = 2 + it % 5, m = 1 + it % std::min(d, 4);
        Point3 p{Scalar(c(rng)), Scalar(c(rng)), Scalar(1 + it % 2)};
        Matrix cond = conditions(d, ProjPoint(p), SingChain::ordinary(m));
        // all partials of order m - 1 at p (Euler covers the lower orders)
        Matrix deriv(0, monomial_count(d));
        for (const auto& alpha : monomials(m - 1)) {
            Vector row;
            for (const auto& mono : monomials(d)) {
                PlaneCurve f(d);
                f.set(mono, Scalar(1));
                for (int k = 0; k < 3; ++k)
                    for (int r = 0; r < alpha[k]; ++r) f = f.partial(k);
                row.push_back(f.evaluate(p));
            }
            deriv.append_row(row);
        }
        Matrix both = cond;
        both.append_rows(deriv);
        const int r = matrix_rank(cond);
        CHECK(r == matrix_rank(deriv));
        CHECK(r == matrix_rank(both));
    }
}

TEST_CASE("condition count law") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> c(-3, 3), m(1, 4);
    for (int it = 0; it < 40; ++it) {
        int m1 = m(rng), m2 = std::min(m1, m(rng));
        ProjPoint p(Scalar(c(rng)), Scalar(c(rng)), Scalar(1));
        PlaneCurve line = PlaneCurve::linear(Scalar(1), Scalar(c(rng)), Scalar(0));
        line = line + PlaneCurve::linear(Scalar(0), Scalar(0), -line.evaluate(p.coords()));
        SingChain ch = it % 2 ? SingChain::ordinary(m1) : SingChain({m1, m2}, {Tangent::assigned(line)});
        const int d = 8;
        Matrix cond = conditions(d, p, ch);
        CHECK(cond.rows() == expected_conditions(ch));
        CHECK(cond.rows() == static_cast<int>(condition_indices(ch).size()));
        // a single chain on a high degree is independent
        CHECK(matrix_rank(cond) == cond.rows());
    }
}

TEST_CASE("blow-up oracle equivalence") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<int> c(-3, 3), m(1, 3), dg(1, 6);
    int positives = 0, negatives = 0;
    for (int it = 0; it < 150; ++it) {
        const int d = dg(rng);
        int m1 = m(rng), m2 = std::min(m1, m(rng));
        if (m1 > d) m1 = d;
        if (m2 > m1) m2 = m1;
        std::vector<int> chain = it % 3 ? std::vector<int>{m1, m2} : std::vector<int>{m1};
        Rational a = c(rng), b = c(rng), k = c(rng);
        ProjPoint p(Scalar(a), Scalar(b), Scalar(1));
        // tangent direction (1, k): k*(x - a z) - (y - b z)
        PlaneCurve line = PlaneCurve::linear(Scalar(k), Scalar(-1), Scalar(b - k * a));
        SingChain ch = chain.size() > 1 ? SingChain(chain, {Tangent::assigned(line)}) : SingChain(chain);
        Matrix cond = conditions(d, p, ch);

        PlaneCurve member = oracle_member(rng, d, a, b, k, chain);
        CHECK(oracle(member, a, b, k, chain));
        CHECK(in_kernel(cond, member));

        auto ker = kernel_basis(cond);
        PlaneCurve f(d);
        for (const auto& v : ker) f = f + PlaneCurve::from_vector(d, v) * Scalar(c(rng));
        CHECK(oracle(f, a, b, k, chain));

        PlaneCurve g = testutil::random_curve(rng, d, 3, 0.5);
        if (it % 2) g = g + member;
        const bool o = oracle(g, a, b, k, chain);
        CHECK(o == in_kernel(cond, g));
        (o ? positives : negatives) += 1;
    }
    CHECK(negatives > 10);
}

TEST_CASE("projective invariance of dimension and multiplicity") {
    std::mt19937_64 rng(34);
    for (int it = 0; it < 12; ++it) {
        Scheme s = random_scheme(rng, 2 + it % 3);
        const int d = 4 + it % 3;
        Matrix A = testutil::random_invertible(rng, 2);
        Matrix Ainv = inverse(A);
        // f -> f o A sends V(f) to A^{-1} V(f)
        Scheme t;
        for (const auto& item : s.items()) {
            ProjPoint q(point_apply(Ainv, item.point.coords()));
            if (item.chain.length() == 1) {
                t.add({item.name, q, item.chain});
            } else {
                t.add({item.name, q,
                       SingChain(item.chain.multiplicities(), {Tangent::assigned(item.chain.tangent()->line.substitute(A))})});
            }
        }
        const int dim = dimension(assemble(d, s));
        CHECK(dim == dimension(assemble(d, t)));

        PlaneCurve f = testutil::random_curve(rng, d, 3);
        for (const auto& item : s.items()) {
            ProjPoint q(point_apply(Ainv, item.point.coords()));
            CHECK(multiplicity_at(f, item.point) == multiplicity_at(f.substitute(A), q));
        }
        auto sols = solve_basis(assemble(d, s));
        CHECK(static_cast<int>(sols.size()) == dim + 1);
        for (const auto& g : sols)
            for (const auto& item : s.items()) CHECK(multiplicity_at(g, item.point) >= item.chain.multiplicities()[0]);
    }
}

TEST_CASE("conditions over a number field") {
    auto K = make_field({Rational(-2), Rational(0), Rational(1)});
    Scalar t = Scalar::generator(K);
    ProjPoint p(t, Scalar::one(K), Scalar::one(K));
    Matrix cond = conditions(4, p, SingChain::ordinary(2));
    CHECK(cond.rows() == 3);
    CHECK(matrix_rank(cond) == 3);
    // (x^2 - 2 y^2)^2 is singular along both points [+-sqrt2, 1, 1]
    CHECK(in_kernel(cond, F("x^4 - 4*x^2*y^2 + 4*y^4")));
}

}
