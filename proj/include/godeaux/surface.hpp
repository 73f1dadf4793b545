#pragma once

// Picard lattice of iterated plane blow-ups, canonical resolution of double
// planes, 2-torsion, and the Du Val / Campedelli criteria.

#include "godeaux/curve_verify.hpp"
#include "godeaux/linear_system.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace godeaux {

/// h*H + sum e_i*E_i in the total-transform basis (H^2 = 1, E_i^2 = -1).
struct DivisorClass {
    int h = 0;
    std::vector<int> e;

    static DivisorClass hyperplane(int n) { return {1, std::vector<int>(n, 0)}; }
    static DivisorClass exceptional(int n, int i);
    /// -3H + sum E_i.
    static DivisorClass canonical(int n);

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(int k) const;
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.h == b.h && a.e == b.e; }
    bool is_even() const;
    std::string str() const;
};

/// Throws DomainError when the lattices differ.
int intersect(const DivisorClass& a, const DivisorClass& b);

struct BlowupCenter {
    std::string name;
    ProjPoint point;          // the proper point underneath
    int parent = -1;          // index of the center whose exceptional line holds this one
    PlaneCurve direction;     // tangent line giving the position on the parent's exceptional line
};

struct BlowupTree {
    std::vector<BlowupCenter> centers;
    int size() const { return static_cast<int>(centers.size()); }
    std::vector<int> children(int i) const;
    /// Index of the center (point, direction) or -1; an empty direction means the proper point.
    int find(const ProjPoint& p, const PlaneCurve* direction = nullptr) const;
    /// Class of the strict transform of the exceptional curve of center i.
    DivisorClass exceptional_strict(int i) const;
};

struct BranchLedger {
    DivisorClass branch;            // 2L
    std::vector<int> m;             // branch multiplicity at each center when blown up
    std::vector<int> d;             // floor(m/2)
    std::vector<bool> joins;        // exceptional curve joins the branch (m odd)
};

struct Resolution {
    int k = 0;                      // branch degree / 2
    Scheme scheme;                  // the total branch scheme that was resolved
    BlowupTree tree;
    BranchLedger ledger;
    DivisorClass K, L;
    int chi = 0;
    int K2 = 0;                     // of the smooth double cover
    int chi_noether = 0;            // (K^2 + e)/12 of the cover, as a cross-check
};

/// Blows up every declared center of multiplicity >= 2 (proper point, then the
/// infinitely near point of a length-2 chain, whose multiplicity also counts the
/// previous exceptional curve when it joined the branch).
Resolution canonical_resolution(int d_branch, const Scheme& total);

/// h^0 of the adjoint system: degree k-3 with multiplicity d_i - 1 at each center.
int pg_adjoint(const Resolution& res);

/// 2^(dim ker psi - 1); psi sends eps to sum eps_i [C_i] in the lattice mod 2.
int beauville_tors2(const std::vector<DivisorClass>& components);

/// A component of a branch curve: declared chains and/or the polynomial.
struct BranchComponent {
    std::string name;
    int degree = 0;
    Scheme scheme;                      // declared singularities (may be empty)
    std::optional<PlaneCurve> curve;    // lines and explicit curves

    static BranchComponent from_curve(std::string name, PlaneCurve f);
};

/// Multiplicity of the component at a center: declared chain data first, then
/// the polynomial. With cross_check, declared items are re-verified on the
/// polynomial (ContractError on mismatch).
int component_multiplicity(const BranchComponent& c, const ProjPoint& p, const PlaneCurve* direction);

/// Total scheme of a reducible branch: multiplicities are summed over the
/// components at every center declared by any of them.
Scheme total_branch_scheme(const std::vector<BranchComponent>& components, bool cross_check = false);

/// Strict transform class of a component on the blow-up.
DivisorClass strict_class(const BranchComponent& c, const BlowupTree& tree);

/// Points q0..q6, lines r1 (q0,q1), r2 (q0,q2), r3 (tangent at q6), and the
/// components of the degree-12 curve.
struct DuValConfig {
    std::array<ProjPoint, 7> q;
    PlaneCurve r1, r2, r3;
    std::vector<BranchComponent> components;
    /// Known rational component imposed on the degree-8 system (reducible case).
    std::optional<PlaneCurve> fixed_part;

    FieldPtr field() const;
    /// [4] at q0,q3,q4,q5; [4,4] at q1,q2 along r1,r2; [3,3] at q6 along r3.
    Scheme curve_scheme() const;
    /// The degree-14 branch r1 + r2 + B with line multiplicities added.
    Scheme branch_scheme() const;
    /// Product of the component polynomials, when all are explicit.
    std::optional<PlaneCurve> curve() const;
};

/// Point p0 of multiplicity 4 and five [3,3] points with tangents.
struct CampedelliConfig {
    ProjPoint p0;
    std::array<ProjPoint, 5> p;
    std::array<PlaneCurve, 5> tangents;
    std::vector<BranchComponent> components;

    FieldPtr field() const;
    Scheme curve_scheme() const;
};

struct HypothesisCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

enum class Torsion { Z2, Z4 };
const char* torsion_name(Torsion t);

struct TorsionResult {
    Torsion torsion = Torsion::Z2;
    int degree = 8;
    Scheme scheme;                    // the degree-8 scheme
    int residual_degree = 8;          // 8 minus the fixed part
    Scheme residual;                  // scheme imposed on the residual system
    int dimension = -1;               // of the residual system
    std::vector<PlaneCurve> solutions;// degree-8 curves (fixed part included)
    std::vector<HypothesisCheck> hypotheses;
};

TorsionResult duval_torsion(const DuValConfig& cfg);

/// The degree-8 scheme used by duval_torsion.
Scheme duval_octic_scheme(const DuValConfig& cfg);

enum class CampedelliVerdict { NotCampedelli, Inconclusive };
const char* campedelli_name(CampedelliVerdict v);

struct CampedelliResult {
    CampedelliVerdict verdict = CampedelliVerdict::Inconclusive;
    PlaneCurve cubic;
    int factor_count = 0;
    std::vector<SingularCandidate> irrelevant;  // singular points of B away from q0..q6
    bool avoids_irrelevant = false;
    std::string detail;
};

CampedelliResult campedelli_obstruction(const DuValConfig& cfg);

struct SelfCheckReport {
    std::vector<HypothesisCheck> checks;  // D^2 = 2, K.D = 0, p_a(D) = 2, B0 + sum C_i even
    DivisorClass D, B0;
    std::vector<DivisorClass> C;
    bool passed() const;
};

SelfCheckReport divisor_selfcheck(const DuValConfig& cfg);
SelfCheckReport divisor_selfcheck(const CampedelliConfig& cfg);

/// Branch components on the resolved surface for beauville_tors2:
/// B0 followed by the five (-2)-curves.
std::vector<DivisorClass> duval_branch_classes(const DuValConfig& cfg);

}  // namespace godeaux
