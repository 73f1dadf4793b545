#pragma once

// Univariate polynomials over Q or a number field.

#include "godeaux/field.hpp"

#include <string>
#include <vector>

namespace godeaux {

class UniPoly {
public:
    UniPoly() = default;
    /// Coefficients lowest degree first; trailing zeros are dropped.
    explicit UniPoly(std::vector<Scalar> coeffs, FieldPtr field = nullptr);
    static UniPoly from_rationals(const std::vector<Rational>& coeffs);
    static UniPoly x(FieldPtr field = nullptr);
    static UniPoly constant(const Scalar& c);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int k) const;
    const Scalar& lead() const;
    const FieldPtr& field() const { return field_; }
    bool is_rational() const;

    Scalar eval(const Scalar& x) const;
    UniPoly monic() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const Scalar& s);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    FieldPtr field_;
    std::vector<Scalar> c_;
};

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly derivative(const UniPoly& f);
/// Monic gcd; gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Resultant with respect to the variable. Throws DomainError on zero input.
Scalar resultant(const UniPoly& f, const UniPoly& g);
/// Sylvester determinant using formal degrees m >= deg f, n >= deg g.
Scalar resultant_formal(const UniPoly& f, const UniPoly& g, int m, int n);

/// f / gcd(f, f'), monic. Throws DomainError on zero input.
UniPoly squarefree_part(const UniPoly& f);

/// Polynomial of degree < xs.size() through the points (Newton form).
UniPoly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

}  // namespace godeaux
