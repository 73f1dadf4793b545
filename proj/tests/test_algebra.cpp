#include <doctest.h>

#include "godeaux/matrix.hpp"
#include "godeaux/modp.hpp"
#include "godeaux/unipoly.hpp"
#include "godeaux/z2.hpp"
#include "godeaux/zpoly.hpp"
#include "util.hpp"

#include <algorithm>
#include <random>

using namespace godeaux;

namespace {

UniPoly Q(std::vector<long> c) {
    std::vector<Rational> r;
    for (long v : c) r.emplace_back(v);
    return UniPoly::from_rationals(r);
}

// Random Eisenstein polynomial at 2: irreducible over Q.
std::vector<Rational> eisenstein(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> c(-5, 5);
    std::vector<Rational> m(n + 1);
    for (int i = 1; i < n; ++i) m[i] = 2 * c(rng);
    m[0] = 2 * (2 * c(rng) + 1);
    m[n] = 1;
    return m;
}

Scalar random_element(std::mt19937_64& rng, const FieldPtr& K) {
    std::vector<Rational> c(K->degree());
    for (auto& v : c) v = testutil::rnd_rational(rng);
    return Scalar(K, c);
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("number field inverses") {
    auto K = make_field({Rational(-2), Rational(0), Rational(1)});
    Scalar t = Scalar::generator(K);
    CHECK(nf_invert(t) == t / Scalar(2));
    CHECK(nf_invert(t + Scalar(1)) == t - Scalar(1));
    CHECK_THROWS_AS(nf_invert(Scalar::zero(K)), DivisionByZero);
    CHECK((t * t).is_rational());
    CHECK((t * t).rational() == 2);
}

TEST_CASE("nf_invert round trip in random fields") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 10; ++n) {
        auto K = make_field(eisenstein(rng, n));
        for (int k = 0; k < 4; ++k) {
            Scalar a = random_element(rng, K);
            if (a.is_zero()) continue;
            CHECK((a * nf_invert(a)).is_one());
            CHECK(nf_invert(nf_invert(a)) == a);
        }
    }
}

TEST_CASE("field arithmetic laws") {
    std::mt19937_64 rng(11);
    auto K = make_field(eisenstein(rng, 5));
    for (int k = 0; k < 20; ++k) {
        Scalar a = random_element(rng, K), b = random_element(rng, K), c = random_element(rng, K);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("scalar parsing") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    auto K = make_field({Rational(-2), Rational(0), Rational(1)});
    CHECK(parse_scalar("t^2 + 1", K) == Scalar(3));
}

TEST_CASE("resultants") {
    CHECK(resultant(Q({-1, 1}), Q({1, 1})) == Scalar(2));
    CHECK(resultant(Q({-1, 0, 1}), Q({-1, 1})) == Scalar(0));
    CHECK(resultant(Q({1, 0, 1}), Q({-2, 0, 1})) == Scalar(9));
    CHECK_THROWS_AS(resultant(UniPoly(), Q({1, 1})), DomainError);
}

TEST_CASE("resultant vanishes exactly on a common factor") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-3, 3), dg(1, 4);
    auto rnd = [&](int d) {
        std::vector<long> v(d + 1);
        for (auto& x : v) x = c(rng);
        if (v.back() == 0) v.back() = 1;
        return Q(v);
    };
    for (int k = 0; k < 60; ++k) {
        UniPoly f = rnd(dg(rng)), g = rnd(dg(rng));
        if (k % 3 == 0) {
            UniPoly h = rnd(1);
            f = f * h;
            g = g * h;
        }
        bool common = gcd(f, g).degree() > 0;
        CHECK(resultant(f, g).is_zero() == common);
        CHECK(resultant_formal(f, g, f.degree(), g.degree()) == resultant(f, g));
    }
}

TEST_CASE("squarefree part and interpolation") {
    CHECK(squarefree_part(Q({0, 0, -1, 1})) == Q({0, -1, 1}));
    std::vector<Scalar> xs{Scalar(0), Scalar(1), Scalar(2)}, ys{Scalar(1), Scalar(2), Scalar(5)};
    CHECK(interpolate(xs, ys) == Q({1, 0, 1}));
}

TEST_CASE("rank, kernel and determinant") {
    Matrix a = Matrix::from_rows({{Scalar(1), Scalar(1)}});
    auto k = kernel_basis(a);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(!k[0][0].is_zero());
    CHECK(kernel_basis(Matrix::identity(3)).empty());
    Matrix b = Matrix::from_rows({{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(3)}});
    CHECK(determinant(b) == Scalar(5));
    Matrix e = inverse(b) * b;
    CHECK((e(0, 0).is_one() && e(1, 1).is_one() && e(0, 1).is_zero() && e(1, 0).is_zero()));
}

TEST_CASE("rank plus nullity equals columns, invariant under row permutations") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-2, 2), sz(1, 7);
    for (int it = 0; it < 60; ++it) {
        int r = sz(rng), n = sz(rng);
        std::vector<Vector> rows(r, Vector(n));
        for (auto& row : rows)
            for (auto& v : row) v = Scalar(c(rng));
        if (it % 4 == 0 && r > 1) rows[r - 1] = rows[0];
        Matrix m = Matrix::from_rows(rows);
        int rank = matrix_rank(m);
        auto ker = kernel_basis(m);
        CHECK(rank + static_cast<int>(ker.size()) == n);
        for (const auto& v : ker)
            for (const auto& row : rows) CHECK(dot(row, v).is_zero());
        std::shuffle(rows.begin(), rows.end(), rng);
        CHECK(matrix_rank(Matrix::from_rows(rows)) == rank);
        CHECK(modp::rank(reduce_mod_p(m, 1000003)) <= rank);
    }
}

TEST_CASE("rank over a number field") {
    auto K = make_field({Rational(-2), Rational(0), Rational(1)});
    Scalar t = Scalar::generator(K);
    Matrix m = Matrix::from_rows({{t, Scalar::one(K) * Scalar(2)}, {Scalar::one(K), t}});
    CHECK(matrix_rank(m) == 1);
    CHECK(kernel_basis(m).size() == 1);
}

TEST_CASE("integer factorization") {
    auto fs = zpoly::factor(zpoly::from_unipoly(Q({-1, 0, 0, 0, 1})));
    REQUIRE(fs.size() == 3);
    CHECK(zpoly::degree(fs[0].poly) == 1);
    CHECK(zpoly::degree(fs[2].poly) == 2);
    auto sq = zpoly::factor(zpoly::from_unipoly(Q({-1, 1}) * Q({-1, 1}) * Q({2, 0, 1})));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].multiplicity == 2);
    CHECK(zpoly::factor(zpoly::from_unipoly(Q({-2, 0, 0, 0, 0, 1}))).size() == 1);
}

TEST_CASE("factorization recombines") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> c(-4, 4), dg(1, 3);
    for (int it = 0; it < 20; ++it) {
        zpoly::ZPoly f{1};
        for (int k = 0; k < 3; ++k) {
            zpoly::ZPoly g(dg(rng) + 1);
            for (auto& v : g) v = c(rng);
            g.back() = 1 + (it % 2);
            f = zpoly::mul(f, g);
        }
        auto fs = zpoly::factor(f);
        zpoly::ZPoly prod{1};
        for (const auto& fa : fs)
            for (int k = 0; k < fa.multiplicity; ++k) prod = zpoly::mul(prod, fa.poly);
        CHECK(prod == zpoly::primitive(f));
        CHECK(fs.size() >= 3);
    }
}

TEST_CASE("modular arithmetic") {
    CHECK(modp::reduce(Integer(15625), 7) == 1);
    CHECK(modp::reduce(Integer(-15625), 7) == 6);
    CHECK(modp::reduce(Rational(1, 2), 7) == 4);
    CHECK_THROWS_AS(modp::reduce(Rational(1, 2), 2), DomainError);
    CHECK(modp::is_prime(1000003));
    CHECK(!modp::is_prime(1000001));
    modp::Poly f(7, {1, 0, 1});  // x^2 + 1 is irreducible mod 7
    CHECK(modp::is_irreducible(f));
    CHECK(modp::factor_degrees(modp::Poly(5, {1, 0, 1})) == std::vector<int>{1, 1});
}

TEST_CASE("two-element field") {
    BitMatrix id{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    CHECK(z2_kernel(id).empty());
    BitMatrix m{3, {{1, 1, 0}, {0, 1, 1}}};
    auto k = z2_kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == BitVector{1, 1, 1});
    CHECK(z2_rank(m) == 2);
}

}
