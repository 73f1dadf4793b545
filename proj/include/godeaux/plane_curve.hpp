#pragma once

// Homogeneous polynomials in x, y, z over Q or a number field.

#include "godeaux/field.hpp"
#include "godeaux/matrix.hpp"
#include "godeaux/modp.hpp"
#include "godeaux/unipoly.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace godeaux {

struct Monomial {
    int ex = 0, ey = 0, ez = 0;
    int degree() const { return ex + ey + ez; }
    int operator[](int k) const { return k == 0 ? ex : (k == 1 ? ey : ez); }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.ex == b.ex && a.ey == b.ey && a.ez == b.ez;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

/// Canonical order: descending lexicographic on (e_x, e_y, e_z).
struct DescLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.ex != b.ex) return a.ex > b.ex;
        if (a.ey != b.ey) return a.ey > b.ey;
        return a.ez > b.ez;
    }
};

/// All monomials of degree d in canonical order.
std::vector<Monomial> monomials(int d);
/// Position of m in monomials(m.degree()).
int monomial_index(const Monomial& m);
inline int monomial_count(int d) { return (d + 1) * (d + 2) / 2; }

using Point3 = std::array<Scalar, 3>;

/// Bivariate polynomial; keys are exponent pairs (first variable, second variable).
class BiPoly {
public:
    using Key = std::pair<int, int>;
    BiPoly() = default;
    explicit BiPoly(FieldPtr field) : field_(std::move(field)) {}

    const std::map<Key, Scalar>& terms() const { return terms_; }
    const FieldPtr& field() const { return field_; }
    Scalar coeff(int i, int j) const;
    void add(int i, int j, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }
    int degree_first() const;
    int degree_second() const;
    int total_degree() const;
    /// Lowest total degree of a nonzero term (-1 for zero).
    int order() const;
    Scalar eval(const Scalar& a, const Scalar& b) const;
    /// Polynomial in the second variable after substituting a for the first.
    UniPoly in_second(const Scalar& a) const;
    /// Polynomial in the first variable after substituting b for the second.
    UniPoly in_first(const Scalar& b) const;
    BiPoly partial(int var) const;

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

private:
    FieldPtr field_;
    std::map<Key, Scalar> terms_;
};

struct ModpCurve {
    int degree = 0;
    modp::u64 p = 2;
    std::map<Monomial, modp::u64, DescLex> terms;
};

class PlaneCurve {
public:
    using Terms = std::map<Monomial, Scalar, DescLex>;

    PlaneCurve() = default;
    explicit PlaneCurve(int degree, FieldPtr field = nullptr);
    /// Coefficient vector indexed by monomials(degree).
    static PlaneCurve from_vector(int degree, const Vector& coeffs);
    /// Linear form a*x + b*y + c*z.
    static PlaneCurve linear(const Scalar& a, const Scalar& b, const Scalar& c);
    static PlaneCurve variable(int k, FieldPtr field = nullptr);

    int degree() const { return degree_; }
    const FieldPtr& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Scalar coeff(const Monomial& m) const;
    void set(const Monomial& m, const Scalar& c);
    Vector to_vector() const;

    Scalar evaluate(const Point3& p) const;
    /// Formal partial derivative in variable 0 (x), 1 (y), or 2 (z).
    PlaneCurve partial(int var) const;
    /// f(A * (x,y,z)^T). Throws DomainError if A is singular.
    PlaneCurve substitute(const Matrix& A) const;
    /// Sets variable `chart` to 1; the result uses the remaining variables in order.
    BiPoly dehomogenize(int chart) const;
    /// Coprime integer coefficients, first canonical term positive.
    PlaneCurve normalize_integer() const;
    /// Makes the first canonical coefficient 1.
    PlaneCurve monic() const;
    ModpCurve reduce_mod_p(modp::u64 p) const;

    PlaneCurve operator-() const;
    friend PlaneCurve operator+(const PlaneCurve& a, const PlaneCurve& b);
    friend PlaneCurve operator-(const PlaneCurve& a, const PlaneCurve& b);
    friend PlaneCurve operator*(const PlaneCurve& a, const PlaneCurve& b);
    friend PlaneCurve operator*(const PlaneCurve& a, const Scalar& s);
    friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PlaneCurve& a, const PlaneCurve& b) { return !(a == b); }

    /// Human-readable form such as "x^2 - 3*y*z".
    std::string str() const;

private:
    int degree_ = 0;
    FieldPtr field_;
    Terms terms_;
};

/// Exact quotient; throws DomainError if b does not divide a.
PlaneCurve divide_exact(const PlaneCurve& a, const PlaneCurve& b);

/// Text format: one `coeff e_x e_y e_z` line per term, canonical order.
std::string write_curve_text(const PlaneCurve& f);
/// Accepts '#' comments and blank lines; coefficients as in parse_scalar.
PlaneCurve read_curve_text(const std::string& text, const FieldPtr& field = nullptr);

/// Parse an expression in x, y, z (and the field generator), e.g. "x - 2*y + z".
/// The result must be homogeneous.
PlaneCurve parse_form(const std::string& text, const FieldPtr& field = nullptr);

/// Linear involution of the plane, M^2 = lambda * I with lambda != 0.
class ProjInvolution {
public:
    explicit ProjInvolution(Matrix m);
    const Matrix& matrix() const { return m_; }
    Point3 apply(const Point3& p) const;
    /// Image of a curve under the involution: f o M (same zero set as the image of V(f)).
    PlaneCurve act(const PlaneCurve& f) const;
    bool is_identity() const;

private:
    Matrix m_;
};

struct EigenSplit {
    std::vector<Vector> plus;
    std::vector<Vector> minus;
};

/// Eigenspaces of f -> f o M on degree-d forms. "plus" is the eigenvalue of the
/// pointwise-fixed line (the 2-dimensional eigenspace of M); diagonal M gives
/// monomial bases. Throws DomainError when M is not diagonalizable over its field.
EigenSplit eigen_split(int d, const ProjInvolution& inv);

Point3 point_apply(const Matrix& m, const Point3& p);

}  // namespace godeaux
