#pragma once

// Singularity requirements (points, infinitely near chains, tangents) and the
// linear conditions they impose on degree-d curves.

#include "godeaux/matrix.hpp"
#include "godeaux/plane_curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace godeaux {

class ProjPoint {
public:
    ProjPoint() = default;
    /// Normalizes so the last nonzero coordinate is 1. Throws on (0,0,0).
    explicit ProjPoint(const Point3& coords);
    ProjPoint(const Scalar& x, const Scalar& y, const Scalar& z) : ProjPoint(Point3{x, y, z}) {}

    const Point3& coords() const { return c_; }
    const Scalar& operator[](int k) const { return c_[k]; }
    FieldPtr field() const;
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    std::string str() const;

private:
    Point3 c_{Scalar(0), Scalar(0), Scalar(1)};
};

/// Tangent direction of a chain step: an assigned line through the point, or FREE.
struct Tangent {
    bool free = false;
    PlaneCurve line;  // degree 1 when assigned

    static Tangent assigned(PlaneCurve l) { return {false, std::move(l)}; }
    static Tangent free_direction() { return {true, PlaneCurve(1)}; }
};

class SingChain {
public:
    /// Validated chain: length 1 or 2, positive, non-increasing.
    /// `tangents` has size multiplicities.size() - 1.
    SingChain(std::vector<int> multiplicities, std::vector<Tangent> tangents = {});
    /// Unvalidated chain (zero or increasing entries allowed) for adjoint and
    /// residual systems; conditions follow the total-transform convention.
    static SingChain virtual_chain(std::vector<int> multiplicities, std::vector<Tangent> tangents = {});
    static SingChain ordinary(int m) { return SingChain({m}); }

    const std::vector<int>& multiplicities() const { return m_; }
    const std::vector<Tangent>& tangents() const { return t_; }
    int length() const { return static_cast<int>(m_.size()); }
    bool has_free_tangent() const;
    /// The tangent of the second chain point, if any.
    const Tangent* tangent() const { return t_.empty() ? nullptr : &t_[0]; }
    std::string str() const;

private:
    SingChain() = default;
    std::vector<int> m_;
    std::vector<Tangent> t_;
};

struct SchemeItem {
    std::string name;
    ProjPoint point;
    SingChain chain;
};

class Scheme {
public:
    Scheme() = default;
    /// Throws DomainError on a duplicate proper point or a tangent not through its point.
    void add(SchemeItem item);
    const std::vector<SchemeItem>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    const SchemeItem& operator[](std::size_t i) const { return items_[i]; }
    /// Index of the item at p, or -1.
    int find(const ProjPoint& p) const;
    FieldPtr field() const;

private:
    std::vector<SchemeItem> items_;
};

/// Invertible A with A*(0,0,1) = p and, for an assigned tangent, the line
/// pulled back to v = 0 in the chart z = 1 with local coordinates (u, v).
Matrix local_frame(const ProjPoint& p, const Tangent* tangent = nullptr);

/// g(u, v) = f(A (u, v, 1)).
BiPoly local_expansion(const PlaneCurve& f, const Matrix& frame);

/// Local coefficients a_ij (i+j < order) of every degree-d monomial under the
/// frame: result[k][index(i,j)] for monomial k, index(i,j) = (i+j)(i+j+1)/2 + j.
std::vector<Vector> local_monomial_series(int d, const Matrix& frame, int order);
inline int local_index(int i, int j) { return (i + j) * (i + j + 1) / 2 + j; }

/// Linear functionals (rows over the monomial basis of degree d) cutting out
/// curves with at least chain c at p. Throws DomainError for FREE tangents
/// (see free_tangent_locus) and for tangents not through p.
Matrix conditions(int d, const ProjPoint& p, const SingChain& c);
/// Same, with an explicit frame (its third column must be p).
Matrix conditions_in_frame(int d, const Matrix& frame, const SingChain& c);

/// The pairs (i, j) of local coefficients a_ij that must vanish, in row order.
std::vector<std::pair<int, int>> condition_indices(const SingChain& c);

int expected_conditions(const SingChain& c);
int virtual_dimension(int d, const Scheme& s);

}  // namespace godeaux
