#pragma once

// Exact scalars: rationals and residues in a number field Q[t]/(m(t)).

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace godeaux {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for mathematically invalid input (bad field mix, singular matrix, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
public:
    using DomainError::DomainError;
};

/// A caller violated a documented precondition (e.g. solve_unique on a
/// system whose dimension is not 0).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Q[t]/(m(t)) with m monic after normalization. Irreducibility of m is the
/// caller's responsibility; `looks_irreducible_mod_p` gives a cheap warning.
class NumberField {
public:
    /// Coefficients lowest degree first. The polynomial is made monic.
    explicit NumberField(std::vector<Rational> minimal_polynomial, std::string generator = "t");

    int degree() const { return degree_; }
    const std::vector<Rational>& minimal_polynomial() const { return minpoly_; }
    const std::string& generator() const { return generator_; }

    /// t^k mod m(t) for degree() <= k <= 2*degree()-2.
    const std::vector<Rational>& power_residue(int k) const { return reduction_[k - degree_]; }

    bool same_as(const NumberField& other) const;

    /// Heuristic check: m mod p is irreducible for some small good prime p.
    /// false does not prove reducibility.
    bool looks_irreducible_mod_p() const;

    std::string str() const;

private:
    std::vector<Rational> minpoly_;
    int degree_;
    std::string generator_;
    std::vector<std::vector<Rational>> reduction_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(std::vector<Rational> minimal_polynomial, std::string generator = "t");

/// Returns whichever of a, b is a genuine extension (nullptr is Q).
/// Throws DomainError when both are extensions and differ.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

/// Element of Q (field() == nullptr) or of a number field.
/// Immutable value type; arithmetic promotes rationals into the extension.
class Scalar {
public:
    Scalar() : coeffs_{Rational(0)} {}
    Scalar(long v) : coeffs_{Rational(v)} {}
    Scalar(int v) : coeffs_{Rational(v)} {}
    Scalar(const Rational& v) : coeffs_{v} { coeffs_[0].canonicalize(); }
    Scalar(const Integer& v) : coeffs_{Rational(v)} {}
    /// Residue with the given representative (reduced if longer than the degree).
    Scalar(FieldPtr field, std::vector<Rational> coeffs);

    static Scalar zero(const FieldPtr& field);
    static Scalar one(const FieldPtr& field);
    static Scalar generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    int field_degree() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the residue lies in the prime field.
    bool is_rational() const;
    /// The value as a rational; throws DomainError if it is not rational.
    const Rational& rational() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Field equality of values (rational 2 == residue 2 in any field).
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(unsigned e) const;
    /// Multiplicative inverse via extended Euclid against the minimal polynomial.
    Scalar inverse() const;

    /// Same value lifted into `field` (rationals only, or identity).
    Scalar in_field(const FieldPtr& field) const;

    std::string str() const;

private:
    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

/// Extended-Euclid inverse; named entry point for the operation.
Scalar nf_invert(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parse "p/q", "-3", or a polynomial in the generator such as "2*t^2 - t/3 + 1".
Rational parse_rational(const std::string& text);
Scalar parse_scalar(const std::string& text, const FieldPtr& field);

}  // namespace godeaux
