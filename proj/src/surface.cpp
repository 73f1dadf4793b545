#include "godeaux/surface.hpp"

#include "godeaux/z2.hpp"

#include <algorithm>
#include <sstream>

namespace godeaux {

namespace {

bool same_line(const PlaneCurve& a, const PlaneCurve& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.degree() == b.degree() && a.monic() == b.monic();
}

void check_lattice(const DivisorClass& a, const DivisorClass& b) {
    if (a.e.size() != b.e.size())
        throw DomainError("divisor classes live on different blow-ups (" + std::to_string(a.e.size()) + " vs " +
                          std::to_string(b.e.size()) + " centers)");
}

}  // namespace

DivisorClass DivisorClass::exceptional(int n, int i) {
    DivisorClass c{0, std::vector<int>(n, 0)};
    c.e.at(i) = 1;
    return c;
}

DivisorClass DivisorClass::canonical(int n) { return {-3, std::vector<int>(n, 1)}; }

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    check_lattice(*this, o);
    DivisorClass r = *this;
    r.h += o.h;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + o * -1; }

DivisorClass DivisorClass::operator*(int k) const {
    DivisorClass r = *this;
    r.h *= k;
    for (auto& v : r.e) v *= k;
    return r;
}

bool DivisorClass::is_even() const {
    if (h % 2) return false;
    return std::all_of(e.begin(), e.end(), [](int v) { return v % 2 == 0; });
}

std::string DivisorClass::str() const {
    std::ostringstream os;
    os << h << "H";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        os << (e[i] < 0 ? " - " : " + ");
        if (std::abs(e[i]) != 1) os << std::abs(e[i]);
        os << "E" << i;
    }
    return os.str();
}

int intersect(const DivisorClass& a, const DivisorClass& b) {
    check_lattice(a, b);
    int r = a.h * b.h;
    for (std::size_t i = 0; i < a.e.size(); ++i) r -= a.e[i] * b.e[i];
    return r;
}

std::vector<int> BlowupTree::children(int i) const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (centers[j].parent == i) out.push_back(j);
    return out;
}

int BlowupTree::find(const ProjPoint& p, const PlaneCurve* direction) const {
    for (int i = 0; i < size(); ++i) {
        const auto& c = centers[i];
        if (c.point != p) continue;
        if (!direction && c.parent < 0) return i;
        if (direction && c.parent >= 0 && same_line(c.direction, *direction)) return i;
    }
    return -1;
}

DivisorClass BlowupTree::exceptional_strict(int i) const {
    DivisorClass c = DivisorClass::exceptional(size(), i);
    for (int j : children(i)) c.e[j] -= 1;
    return c;
}

Resolution canonical_resolution(int d_branch, const Scheme& total) {
    if (d_branch < 0 || d_branch % 2) throw DomainError("canonical_resolution: branch degree must be even");
    Resolution res;
    res.k = d_branch / 2;
    res.scheme = total;
    auto& led = res.ledger;
    std::vector<int> declared;  // multiplicity of the branch curve itself at each center
    for (const auto& it : total.items()) {
        const auto& m = it.chain.multiplicities();
        if (m[0] < 2) continue;
        const int i = res.tree.size();
        res.tree.centers.push_back({it.name, it.point, -1, PlaneCurve()});
        led.m.push_back(m[0]);
        declared.push_back(m[0]);
        if (m.size() == 2) {
            const int m1 = m[1] + (m[0] % 2);
            if (m1 < 2) continue;
            const Tangent* t = it.chain.tangent();
            if (t->free) throw DomainError("canonical_resolution: FREE tangent at " + it.name + " has no position");
            res.tree.centers.push_back({it.name + "'", it.point, i, t->line});
            led.m.push_back(m1);
            declared.push_back(m[1]);
        }
    }
    const int n = res.tree.size();
    for (int mi : led.m) {
        led.d.push_back(mi / 2);
        led.joins.push_back(mi % 2 == 1);
    }
    res.K = DivisorClass::canonical(n);
    res.L = DivisorClass{res.k, std::vector<int>(n, 0)};
    for (int i = 0; i < n; ++i) res.L.e[i] = -led.d[i];
    led.branch = res.L * 2;

    // The reduced branch: strict transform plus the exceptional curves that joined.
    DivisorClass reduced{d_branch, std::vector<int>(n, 0)};
    for (int i = 0; i < n; ++i) reduced.e[i] = -declared[i];
    for (int i = 0; i < n; ++i)
        if (led.joins[i]) reduced = reduced + res.tree.exceptional_strict(i);
    for (int i = 0; i < n; ++i)
        if (reduced.e[i] % 2)
            throw ContractError("canonical_resolution: branch not even at " + res.tree.centers[i].name + " (coefficient " +
                                std::to_string(reduced.e[i]) + ")");
    if (!(reduced == led.branch)) throw ContractError("canonical_resolution: branch ledger mismatch");

    const int LL = intersect(res.L, res.L), KL = intersect(res.K, res.L);
    res.chi = 2 + (LL + KL) / 2;
    res.K2 = 2 * intersect(res.K + res.L, res.K + res.L);
    // Noether on the cover: e(V) = 2 e(W) - e(B), e(B) = -B.(B + K).
    const int eW = 3 + n;
    const int eB = -intersect(led.branch, led.branch + res.K);
    const int eV = 2 * eW - eB;
    res.chi_noether = (res.K2 + eV) % 12 == 0 ? (res.K2 + eV) / 12 : -1000;
    return res;
}

int pg_adjoint(const Resolution& res) {
    const int deg = res.k - 3;
    if (deg < 0) return 0;
    Scheme adj;
    const auto& tree = res.tree;
    for (int i = 0; i < tree.size(); ++i) {
        const auto& c = tree.centers[i];
        if (c.parent >= 0) continue;
        auto kids = tree.children(i);
        const int a = res.ledger.d[i] - 1;
        if (kids.empty()) {
            adj.add({c.name, c.point, SingChain::virtual_chain({a})});
        } else {
            const auto& k = tree.centers[kids[0]];
            adj.add({c.name, c.point,
                     SingChain::virtual_chain({a, res.ledger.d[kids[0]] - 1}, {Tangent::assigned(k.direction)})});
        }
    }
    LinearSystem ls = assemble(deg, adj);
    return dimension(ls) + 1;
}

int beauville_tors2(const std::vector<DivisorClass>& components) {
    if (components.empty()) throw DomainError("beauville_tors2: no components");
    DivisorClass sum = components[0];
    for (std::size_t i = 1; i < components.size(); ++i) sum = sum + components[i];
    if (!sum.is_even()) throw DomainError("beauville_tors2: the sum of the components is not even: " + sum.str());
    const int n = static_cast<int>(components[0].e.size());
    BitMatrix m;
    m.cols = static_cast<int>(components.size());
    for (int r = 0; r <= n; ++r) {
        BitVector row(m.cols);
        for (int j = 0; j < m.cols; ++j) {
            int v = r == 0 ? components[j].h : components[j].e[r - 1];
            row[j] = static_cast<std::uint8_t>(v & 1);
        }
        m.rows.push_back(row);
    }
    const int dim = static_cast<int>(z2_kernel(m).size());
    return 1 << (dim - 1);
}

BranchComponent BranchComponent::from_curve(std::string name, PlaneCurve f) {
    BranchComponent c;
    c.name = std::move(name);
    c.degree = f.degree();
    c.curve = std::move(f);
    return c;
}

int component_multiplicity(const BranchComponent& c, const ProjPoint& p, const PlaneCurve* direction) {
    const int j = c.scheme.find(p);
    if (j >= 0) {
        const SingChain& ch = c.scheme[j].chain;
        if (!direction) return ch.multiplicities()[0];
        const Tangent* t = ch.tangent();
        if (t && !t->free && same_line(t->line, *direction)) return ch.multiplicities()[1];
    }
    if (c.curve) {
        if (!direction) return multiplicity_at(*c.curve, p);
        return infinitely_near_multiplicity(*c.curve, p, *direction);
    }
    return 0;
}

Scheme total_branch_scheme(const std::vector<BranchComponent>& components, bool cross_check) {
    struct Center {
        std::string name;
        ProjPoint point;
        std::optional<PlaneCurve> direction;
    };
    std::vector<Center> centers;
    for (const auto& c : components) {
        if (cross_check && c.curve) {
            auto rep = verify_scheme(*c.curve, c.scheme);
            for (std::size_t i = 0; i < rep.items.size(); ++i)
                if (rep.items[i].verdict != Verdict::Exact)
                    throw ContractError("declared chain " + c.scheme[i].chain.str() + " at " + rep.names[i] + " of " +
                                        c.name + " does not match the polynomial (" +
                                        verdict_name(rep.items[i].verdict) + ")");
        }
        for (const auto& it : c.scheme.items()) {
            auto pos = std::find_if(centers.begin(), centers.end(), [&](const Center& x) { return x.point == it.point; });
            if (pos == centers.end()) {
                centers.push_back({it.name, it.point, std::nullopt});
                pos = centers.end() - 1;
            }
            const Tangent* t = it.chain.tangent();
            if (!t || it.chain.multiplicities()[1] == 0) continue;
            if (t->free) throw DomainError("total_branch_scheme: FREE tangent at " + it.name);
            if (pos->direction && !same_line(*pos->direction, t->line))
                throw DomainError("total_branch_scheme: two infinitely near centers at " + it.name);
            pos->direction = t->line;
        }
    }
    Scheme total;
    for (const auto& c : centers) {
        int m0 = 0, m1 = 0;
        for (const auto& comp : components) {
            m0 += component_multiplicity(comp, c.point, nullptr);
            if (c.direction) m1 += component_multiplicity(comp, c.point, &*c.direction);
        }
        if (c.direction && m1 > 0) total.add({c.name, c.point, SingChain({m0, m1}, {Tangent::assigned(*c.direction)})});
        else total.add({c.name, c.point, SingChain::ordinary(m0)});
    }
    return total;
}

DivisorClass strict_class(const BranchComponent& c, const BlowupTree& tree) {
    DivisorClass r{c.degree, std::vector<int>(tree.size(), 0)};
    for (int i = 0; i < tree.size(); ++i) {
        const auto& ctr = tree.centers[i];
        r.e[i] = -component_multiplicity(c, ctr.point, ctr.parent >= 0 ? &ctr.direction : nullptr);
    }
    return r;
}

namespace {

const char* const kDuValNames[7] = {"q0", "q1", "q2", "q3", "q4", "q5", "q6"};

void require_line_through(const PlaneCurve& l, const ProjPoint& p, const std::string& what) {
    if (l.degree() != 1) throw DomainError(what + " is not a line");
    if (!l.evaluate(p.coords()).is_zero()) throw DomainError(what + " does not pass through " + p.str());
}

void check_duval(const DuValConfig& cfg) {
    require_line_through(cfg.r1, cfg.q[0], "r1");
    require_line_through(cfg.r1, cfg.q[1], "r1");
    require_line_through(cfg.r2, cfg.q[0], "r2");
    require_line_through(cfg.r2, cfg.q[2], "r2");
    require_line_through(cfg.r3, cfg.q[6], "r3");
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            if (cfg.q[i] == cfg.q[j])
                throw DomainError(std::string("Du Val configuration: ") + kDuValNames[i] + " and " + kDuValNames[j] +
                                  " coincide");
}

BranchComponent requirement_component(const std::string& name, int degree, const Scheme& s) {
    BranchComponent c;
    c.name = name;
    c.degree = degree;
    c.scheme = s;
    return c;
}

}  // namespace

FieldPtr DuValConfig::field() const {
    FieldPtr f;
    for (const auto& p : q) f = common_field(f, p.field());
    for (const auto* l : {&r1, &r2, &r3}) f = common_field(f, l->field());
    for (const auto& c : components) {
        f = common_field(f, c.scheme.field());
        if (c.curve) f = common_field(f, c.curve->field());
    }
    if (fixed_part) f = common_field(f, fixed_part->field());
    return f;
}

Scheme DuValConfig::curve_scheme() const {
    check_duval(*this);
    Scheme s;
    s.add({"q0", q[0], SingChain::ordinary(4)});
    s.add({"q1", q[1], SingChain({4, 4}, {Tangent::assigned(r1)})});
    s.add({"q2", q[2], SingChain({4, 4}, {Tangent::assigned(r2)})});
    for (int i = 3; i <= 5; ++i) s.add({kDuValNames[i], q[i], SingChain::ordinary(4)});
    s.add({"q6", q[6], SingChain({3, 3}, {Tangent::assigned(r3)})});
    return s;
}

Scheme DuValConfig::branch_scheme() const {
    return total_branch_scheme({BranchComponent::from_curve("r1", r1), BranchComponent::from_curve("r2", r2),
                                requirement_component("B", 12, curve_scheme())});
}

std::optional<PlaneCurve> DuValConfig::curve() const {
    if (components.empty()) return std::nullopt;
    std::optional<PlaneCurve> f;
    for (const auto& c : components) {
        if (!c.curve) return std::nullopt;
        f = f ? *f * *c.curve : *c.curve;
    }
    return f;
}

FieldPtr CampedelliConfig::field() const {
    FieldPtr f = p0.field();
    for (const auto& x : p) f = common_field(f, x.field());
    for (const auto& t : tangents) f = common_field(f, t.field());
    for (const auto& c : components)
        if (c.curve) f = common_field(f, c.curve->field());
    return f;
}

Scheme CampedelliConfig::curve_scheme() const {
    Scheme s;
    s.add({"p0", p0, SingChain::ordinary(4)});
    for (int i = 0; i < 5; ++i) {
        require_line_through(tangents[i], p[i], "tangent at p" + std::to_string(i + 1));
        s.add({"p" + std::to_string(i + 1), p[i], SingChain({3, 3}, {Tangent::assigned(tangents[i])})});
    }
    return s;
}

const char* torsion_name(Torsion t) { return t == Torsion::Z4 ? "Z4" : "Z2"; }

Scheme duval_octic_scheme(const DuValConfig& cfg) {
    check_duval(cfg);
    Scheme s;
    s.add({"q0", cfg.q[0], SingChain::ordinary(2)});
    s.add({"q1", cfg.q[1], SingChain({3, 2}, {Tangent::assigned(cfg.r1)})});
    s.add({"q2", cfg.q[2], SingChain({3, 2}, {Tangent::assigned(cfg.r2)})});
    for (int i = 3; i <= 5; ++i) s.add({kDuValNames[i], cfg.q[i], SingChain::ordinary(3)});
    s.add({"q6", cfg.q[6], SingChain({2, 2}, {Tangent::assigned(cfg.r3)})});
    return s;
}

TorsionResult duval_torsion(const DuValConfig& cfg) {
    check_duval(cfg);
    TorsionResult res;
    res.scheme = duval_octic_scheme(cfg);
    auto& hyp = res.hypotheses;
    hyp.push_back({"q1, q2 proper and distinct from q0", true, ""});
    {
        int g = geometric_genus(12, cfg.curve_scheme());
        hyp.push_back({"declared genus of B0 is 1", g == 1, "genus " + std::to_string(g)});
    }
    const std::optional<PlaneCurve> B = cfg.curve();
    if (B) {
        auto rep = verify_scheme(*B, cfg.curve_scheme());
        std::string off;
        for (std::size_t i = 0; i < rep.items.size(); ++i)
            if (rep.items[i].verdict != Verdict::Exact)
                off += " " + rep.names[i] + " " + verdict_name(rep.items[i].verdict);
        hyp.push_back({"B has exactly the declared singularities", rep.exact(), off});
        if (!rep.exact())
            throw DomainError("duval_torsion: criterion not applicable: the degree-12 curve does not have the"
                              " declared singularities:" + off);
        if (!cfg.fixed_part) {
            int n = absolute_factor_count(*B);
            hyp.push_back({"B0 absolutely irreducible", n == 1, std::to_string(n) + " absolute factor(s)"});
            if (n != 1)
                throw DomainError("duval_torsion: criterion not applicable: the degree-12 curve has " +
                                  std::to_string(n) + " absolutely irreducible factors and no fixed part is given");
        } else {
            bool divides = true;
            try {
                divide_exact(*B, *cfg.fixed_part);
            } catch (const DomainError&) {
                divides = false;
            }
            hyp.push_back({"fixed part is a component of B", divides, cfg.fixed_part->str()});
            if (!divides)
                throw DomainError("duval_torsion: criterion not applicable: " + cfg.fixed_part->str() +
                                  " is not a component of the degree-12 curve");
        }
    }

    res.residual_degree = 8;
    res.residual = res.scheme;
    if (cfg.fixed_part) {
        const PlaneCurve& F = *cfg.fixed_part;
        res.residual_degree = 8 - F.degree();
        if (res.residual_degree < 0) throw DomainError("duval_torsion: fixed part of degree above 8");
        Scheme r;
        for (const auto& it : res.scheme.items()) {
            const auto& m = it.chain.multiplicities();
            const int mu0 = multiplicity_at(F, it.point);
            std::vector<int> rm{std::max(m[0] - mu0, 0)};
            std::vector<Tangent> ts;
            if (m.size() == 2) {
                const Tangent* t = it.chain.tangent();
                const int mu1 = mu0 ? infinitely_near_multiplicity(F, it.point, t->line) : 0;
                rm.push_back(std::max(m[1] - mu1, 0));
                ts.push_back(*t);
            }
            r.add({it.name, it.point, SingChain::virtual_chain(rm, ts)});
        }
        res.residual = r;
    }
    LinearSystem ls = assemble(res.residual_degree, res.residual);
    res.dimension = dimension(ls);
    res.degree = 8;
    if (res.dimension >= 0) {
        res.torsion = Torsion::Z4;
        for (auto& c : solve_basis(ls)) {
            PlaneCurve full = cfg.fixed_part ? c * *cfg.fixed_part : c;
            res.solutions.push_back(full.field() ? full.monic() : full.normalize_integer());
        }
    }
    return res;
}

const char* campedelli_name(CampedelliVerdict v) {
    return v == CampedelliVerdict::NotCampedelli ? "NOT_CAMPEDELLI" : "INCONCLUSIVE";
}

CampedelliResult campedelli_obstruction(const DuValConfig& cfg) {
    check_duval(cfg);
    Scheme s;
    s.add({"q0", cfg.q[0], SingChain::ordinary(1)});
    s.add({"q1", cfg.q[1], SingChain({1, 1}, {Tangent::assigned(cfg.r1)})});
    s.add({"q2", cfg.q[2], SingChain({1, 1}, {Tangent::assigned(cfg.r2)})});
    for (int i = 3; i <= 6; ++i) s.add({kDuValNames[i], cfg.q[i], SingChain::ordinary(1)});
    LinearSystem ls = assemble(3, s);
    const int dim = dimension(ls);
    if (dim != 0)
        throw DomainError("campedelli_obstruction: degenerate configuration (cubic system of dimension " +
                          std::to_string(dim) + ")");
    CampedelliResult res;
    res.cubic = solve_unique(ls);
    std::ostringstream detail;
    try {
        res.factor_count = absolute_factor_count(res.cubic);
    } catch (const DomainError&) {
        res.factor_count = 0;
        detail << "cubic is not reduced; ";
    }
    const std::optional<PlaneCurve> B = cfg.curve();
    if (!B) throw DomainError("campedelli_obstruction: the degree-12 curve is needed for the singularity scan");
    std::vector<ProjPoint> hints(cfg.q.begin(), cfg.q.end());
    res.avoids_irrelevant = true;
    for (const auto& c : singular_locus_scan(*B, hints)) {
        if (c.located() && std::find(hints.begin(), hints.end(), c.point) != hints.end()) continue;
        res.irrelevant.push_back(c);
        Passage p = passes_through(res.cubic, *B, c);
        if (p != Passage::Avoids) {
            res.avoids_irrelevant = false;
            detail << (p == Passage::Passes ? "cubic passes through " : "cannot decide passage through ") << c.str()
                   << "; ";
        }
    }
    if (res.factor_count != 1) detail << "cubic has " << res.factor_count << " absolute factor(s); ";
    res.verdict = res.factor_count == 1 && res.avoids_irrelevant ? CampedelliVerdict::NotCampedelli
                                                                 : CampedelliVerdict::Inconclusive;
    res.detail = detail.str();
    if (!res.detail.empty()) res.detail.resize(res.detail.size() - 2);
    return res;
}

bool SelfCheckReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const HypothesisCheck& c) { return c.passed; });
}

namespace {

SelfCheckReport selfcheck(const Resolution& res, const DivisorClass& B0, const std::vector<DivisorClass>& C) {
    SelfCheckReport r;
    r.B0 = B0;
    r.C = C;
    const DivisorClass K = res.K;
    r.D = K * 2 + B0;
    const int DD = intersect(r.D, r.D), KD = intersect(K, r.D);
    const int pa = 1 + (DD + KD) / 2;
    r.checks.push_back({"D^2 = 2", DD == 2, std::to_string(DD)});
    r.checks.push_back({"K.D = 0", KD == 0, std::to_string(KD)});
    r.checks.push_back({"p_a(D) = 2", pa == 2 && (DD + KD) % 2 == 0, std::to_string(pa)});
    DivisorClass sum = B0;
    for (const auto& c : C) sum = sum + c;
    std::string odd;
    if (sum.h % 2) odd += " H";
    for (int i = 0; i < res.tree.size(); ++i)
        if (sum.e[i] % 2) odd += " E(" + res.tree.centers[i].name + ")";
    r.checks.push_back({"B0 + sum C_i even", odd.empty(), odd.empty() ? sum.str() : "odd at" + odd});
    return r;
}

DivisorClass sum_strict(const std::vector<BranchComponent>& comps, const BlowupTree& tree) {
    DivisorClass b{0, std::vector<int>(tree.size(), 0)};
    for (const auto& c : comps) b = b + strict_class(c, tree);
    return b;
}

std::vector<DivisorClass> duval_minus_two_curves(const DuValConfig& cfg, const BlowupTree& tree) {
    std::vector<DivisorClass> C;
    C.push_back(strict_class(BranchComponent::from_curve("r1", cfg.r1), tree));
    C.push_back(strict_class(BranchComponent::from_curve("r2", cfg.r2), tree));
    for (int i : {1, 2, 6}) {
        int j = tree.find(cfg.q[i]);
        if (j < 0) throw ContractError(std::string("no blow-up center at ") + kDuValNames[i]);
        C.push_back(tree.exceptional_strict(j));
    }
    return C;
}

}  // namespace

std::vector<DivisorClass> duval_branch_classes(const DuValConfig& cfg) {
    Resolution res = canonical_resolution(14, cfg.branch_scheme());
    std::vector<DivisorClass> out{sum_strict(cfg.components, res.tree)};
    for (auto& c : duval_minus_two_curves(cfg, res.tree)) out.push_back(c);
    return out;
}

SelfCheckReport divisor_selfcheck(const DuValConfig& cfg) {
    Resolution res = canonical_resolution(14, cfg.branch_scheme());
    return selfcheck(res, sum_strict(cfg.components, res.tree), duval_minus_two_curves(cfg, res.tree));
}

SelfCheckReport divisor_selfcheck(const CampedelliConfig& cfg) {
    Resolution res = canonical_resolution(10, cfg.curve_scheme());
    std::vector<DivisorClass> C;
    for (int i = 0; i < 5; ++i) C.push_back(res.tree.exceptional_strict(res.tree.find(cfg.p[i])));
    return selfcheck(res, sum_strict(cfg.components, res.tree), C);
}

}  // namespace godeaux
