#pragma once

// Arithmetic over prime fields F_p (p < 2^32): scalars, dense univariate
// polynomials, factorization, and dense elimination.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace godeaux::modp {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
inline u64 add(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);

bool is_prime(u64 n);
/// Smallest prime >= n.
u64 next_prime(u64 n);

/// Residue of an integer (p must not divide the denominator of a rational).
u64 reduce(const mpz_class& v, u64 p);
/// Throws godeaux::DomainError when p divides the denominator.
u64 reduce(const mpq_class& v, u64 p);

/// Dense polynomial over F_p, lowest degree first, trailing zeros trimmed.
struct Poly {
    u64 p = 2;
    std::vector<u64> c;

    Poly() = default;
    Poly(u64 prime, std::vector<u64> coeffs);
    static Poly from_integers(const std::vector<mpz_class>& coeffs, u64 prime);
    static Poly monomial(u64 prime, int k, u64 coeff = 1);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    u64 lead() const { return c.back(); }
    void trim();
    Poly monic() const;
    u64 eval(u64 x) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.p == b.p && a.c == b.c; }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, u64 s);
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
/// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);
/// s*a + t*b = g with g monic.
Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
Poly powmod(const Poly& base, mpz_class e, const Poly& m);

bool is_squarefree(const Poly& f);
bool is_irreducible(const Poly& f);

/// Monic irreducible factors of a squarefree polynomial of degree >= 1,
/// sorted by (degree, coefficients). Deterministic for a given seed.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed = 1);

/// Degrees of the irreducible factors of a squarefree polynomial (sorted).
std::vector<int> factor_degrees(const Poly& f);

/// Dense matrix over F_p, row-major.
struct Matrix {
    u64 p = 2;
    int rows = 0, cols = 0;
    std::vector<u64> a;

    Matrix() = default;
    Matrix(u64 prime, int r, int c) : p(prime), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    u64& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    u64 at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

int rank(Matrix m);
/// Basis of the right kernel in reduced form.
std::vector<std::vector<u64>> kernel(Matrix m);
u64 determinant(Matrix m);

}  // namespace godeaux::modp
