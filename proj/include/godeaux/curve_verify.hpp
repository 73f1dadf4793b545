#pragma once

// Checks on concrete curves: multiplicities, infinitely near chains, singular
// points, absolute irreducibility, genus.

#include "godeaux/scheme.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace godeaux {

struct LocalExpansion {
    BiPoly g;                 // f(A (u, v, 1))
    int multiplicity = 0;     // order of g at the origin
    BiPoly tangent_cone;      // lowest homogeneous part
};

LocalExpansion expand_at(const PlaneCurve& f, const ProjPoint& p, const Tangent* tangent = nullptr);

/// Order of vanishing at p (0 when p is not on the curve).
int multiplicity_at(const PlaneCurve& f, const ProjPoint& p);

enum class Verdict { Exact, Worse, Insufficient };
const char* verdict_name(Verdict v);

struct ChainReport {
    Verdict verdict = Verdict::Exact;
    std::vector<int> actual;  // multiplicities along the chain, then the extension point if inspected
    std::string tangent_cone; // at the proper point, in local coordinates (u, v)
    std::string detail;
};

/// EXACT: each chain multiplicity matches, tangents hold, and the chain does not
/// continue with an infinitely near point of the last multiplicity.
ChainReport chain_verify(const PlaneCurve& f, const ProjPoint& p, const SingChain& c);

struct SchemeReport {
    std::vector<std::string> names;
    std::vector<ChainReport> items;
    bool exact() const;
};

SchemeReport verify_scheme(const PlaneCurve& f, const Scheme& s);

/// Exact test via the discriminant of a dehomogenization that keeps the degree.
bool is_squarefree(const PlaneCurve& f);

struct SingularCandidate {
    enum class Kind {
        Point,      // located: coordinates in the working field
        Abscissa,   // chart z=1: x is a root of `factor` (some roots may carry no singular point)
        Fibre,      // chart z=1, x = x_value: y is a root of `factor`; every root is singular
        Infinity,   // line z=0, points [x, 1, 0] with x a root of `factor`; every root is singular
    };
    Kind kind = Kind::Point;
    ProjPoint point;
    int multiplicity = 0;          // multiplicity_at for located points
    Scalar x_value;
    UniPoly factor;
    int factor_multiplicity = 0;   // in the eliminating polynomial
    bool located() const { return kind == Kind::Point; }
    std::string chart() const;
    std::string str() const;
};

/// Singular points of a squarefree curve. Located points come first in the
/// order they are found; the rest are reported by their defining factor.
/// `hints` are tested directly (useful over number fields where only hinted
/// and linear factors can be split off).
std::vector<SingularCandidate> singular_locus_scan(const PlaneCurve& f, const std::vector<ProjPoint>& hints = {});

enum class Passage { Avoids, Passes, Unknown };

/// Whether the curve g passes through a singular point of f described by c.
Passage passes_through(const PlaneCurve& g, const PlaneCurve& f, const SingularCandidate& c);

/// Multiplicity of the strict transform at the point infinitely near p in the
/// direction of the line `direction` (through p).
int infinitely_near_multiplicity(const PlaneCurve& f, const ProjPoint& p, const PlaneCurve& direction);

struct FactorCountOptions {
    bool allow_modp_certificate = true;
    /// Primes for the certificate are searched from here (0: just above 2^61).
    std::uint64_t prime = 0;
};

/// Number of absolutely irreducible factors (dimension of the Gao system).
int absolute_factor_count(const PlaneCurve& f, const FactorCountOptions& opt = {});

/// (d-1)(d-2)/2 minus the delta invariants of the declared chains.
/// Throws DomainError ("inconsistent declared data") when negative.
int geometric_genus(int d, const Scheme& s);

}  // namespace godeaux
