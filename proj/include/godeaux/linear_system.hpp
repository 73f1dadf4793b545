#pragma once

// Linear systems of plane curves with assigned singularities.

#include "godeaux/scheme.hpp"
#include "godeaux/zpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace godeaux {

struct Symmetry {
    ProjInvolution involution;
    bool plus = true;
};

struct LinearSystem {
    int degree = 0;
    Scheme scheme;          // items as given
    Scheme full_scheme;     // with the involution images of the given items
    std::optional<Symmetry> symmetry;
    std::vector<Vector> basis;  // eigenbasis (monomial coordinates); empty without symmetry
    Matrix matrix;              // rows = conditions, cols = monomials or eigenbasis
    std::vector<std::string> row_owner;  // item name per row
};

/// Condition matrix of the scheme on degree-d curves. Under a symmetry the
/// scheme may list one representative per orbit; an image that is listed must
/// carry the image chain, otherwise DomainError names the point.
LinearSystem assemble(int d, const Scheme& s, const std::optional<Symmetry>& sym = std::nullopt);

int dimension(const LinearSystem& ls);

/// Dimension of the reduction mod p (an upper bound for dimension()), or
/// nullopt when the matrix is not rational or p divides a denominator.
std::optional<int> dimension_mod_p(const LinearSystem& ls, std::uint64_t p);

/// Kernel mapped back to curves (normalize_integer over Q, monic otherwise).
/// Every solution is re-checked against the conditions of the full scheme.
std::vector<PlaneCurve> solve_basis(const LinearSystem& ls);

/// Throws ContractError unless dimension(ls) == 0.
PlaneCurve solve_unique(const LinearSystem& ls);

/// A scheme with one moving point p(t) = base + t * e_coord (base[coord] = 0).
struct ParamScheme {
    Scheme fixed;
    std::string name;
    Point3 base;
    int coord = 0;
    SingChain chain = SingChain::ordinary(1);

    ProjPoint point_at(const Scalar& t) const;
    /// The specialization as an ordinary scheme (moving item appended last).
    Scheme at(const Scalar& t) const;
};

struct LocusFactor {
    zpoly::ZPoly poly;      // primitive, positive leading coefficient
    int multiplicity = 1;   // in the gcd of the minors
    bool degenerate = false;
    std::string reason;     // why the specialization is degenerate
    bool certified = false; // exact rank drop confirmed over Q[t]/(poly)
    int dimension = -1;     // dimension of the specialized system
};

struct LocusResult {
    bool everything = false;   // system solvable for every parameter value
    UniPoly squarefree;        // squarefree part of the gcd of maximal minors (monic)
    std::vector<LocusFactor> factors;
    int constant_rank = 0;
    int kernel_dim = 0;        // columns after eliminating constant rows
    int param_rows = 0;
    int samples = 0;
    /// Squarefree product of certified non-degenerate factors.
    UniPoly proper_locus() const;
};

struct LocusOptions {
    int threads = 1;
    std::uint64_t seed = 20240601;
    bool certify = true;
    /// Factors up to this degree are solved and discarded when the general
    /// solution is non-reduced.
    int reduced_check_max_degree = 1;
};

/// Parameter values where the specialized system acquires a nonzero solution.
LocusResult rank_drop_locus(int d, const ParamScheme& ps, const LocusOptions& opt = {});

struct FreeTangentLocus {
    bool everything = false;
    Point3 b0, b1;           // direction(s) = b0 + s*b1; s = infinity is b1
    UniPoly squarefree;      // in s
    std::vector<LocusFactor> factors;
    bool at_infinity = false;
};

/// Directions of the free tangent of item `index` for which the system with
/// that tangent assigned is nonempty.
FreeTangentLocus free_tangent_locus(int d, const Scheme& s, std::size_t index, const LocusOptions& opt = {});

}  // namespace godeaux
