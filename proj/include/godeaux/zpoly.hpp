#pragma once

// Integer polynomials: modular gcd and factorization over Q (Zassenhaus).

#include "godeaux/field.hpp"
#include "godeaux/unipoly.hpp"

#include <vector>

namespace godeaux::zpoly {

/// Lowest degree first, trailing zeros trimmed.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& f);
inline int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
Integer content(const ZPoly& f);
/// Divides out the content and makes the leading coefficient positive.
ZPoly primitive(const ZPoly& f);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& f);
/// Exact division a / b over Z; returns false if b does not divide a.
bool divide(const ZPoly& a, const ZPoly& b, ZPoly& q);

/// Primitive integer multiple of a rational polynomial (positive leading coefficient).
ZPoly from_unipoly(const UniPoly& f);
UniPoly to_unipoly(const ZPoly& f);

/// Primitive gcd with positive leading coefficient (multi-modular, verified by division).
ZPoly gcd(const ZPoly& a, const ZPoly& b);
ZPoly squarefree_part(const ZPoly& f);

struct Factor {
    ZPoly poly;
    int multiplicity;
};

/// Irreducible factorization over Q of a nonzero polynomial, factors primitive
/// with positive leading coefficient, sorted by (degree, coefficients).
/// Constant factors are dropped.
std::vector<Factor> factor(const ZPoly& f);

/// Irreducible factors of a squarefree primitive polynomial.
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

}  // namespace godeaux::zpoly
