#include "godeaux/curve_verify.hpp"

#include "godeaux/zpoly.hpp"

#include <algorithm>
#include <sstream>

namespace godeaux {

namespace {

BiPoly homogeneous_part(const BiPoly& g, int k) {
    BiPoly h(g.field());
    for (const auto& [e, c] : g.terms())
        if (e.first + e.second == k) h.add(e.first, e.second, c);
    return h;
}

BiPoly linear_bipoly(const Scalar& a, const Scalar& b, const FieldPtr& f) {
    BiPoly l(f);
    l.add(1, 0, a);
    l.add(0, 1, b);
    return l;
}

BiPoly bipoly_one(const FieldPtr& f) {
    BiPoly one(f);
    one.add(0, 0, Scalar::one(f));
    return one;
}

// g(a*u + b*v, c*u + d*v)
BiPoly linear_substitute(const BiPoly& g, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    const FieldPtr f = g.field();
    const int n = std::max(g.degree_first(), g.degree_second());
    std::vector<BiPoly> p1{bipoly_one(f)}, p2{bipoly_one(f)};
    BiPoly l1 = linear_bipoly(a, b, f), l2 = linear_bipoly(c, d, f);
    for (int k = 1; k <= n; ++k) {
        p1.push_back(p1.back() * l1);
        p2.push_back(p2.back() * l2);
    }
    BiPoly r(f);
    for (const auto& [e, coef] : g.terms()) {
        BiPoly t = p1[e.first] * p2[e.second];
        for (const auto& [e2, c2] : t.terms()) r.add(e2.first, e2.second, coef * c2);
    }
    return r;
}

// Strict transform under v = u*w in the chart containing the direction v = 0.
BiPoly blow_up(const BiPoly& g, int m) {
    BiPoly r(g.field());
    for (const auto& [e, c] : g.terms()) {
        if (e.first + e.second < m) throw ContractError("blow_up: order below multiplicity");
        r.add(e.first + e.second - m, e.second, c);
    }
    return r;
}

std::string bipoly_str(const BiPoly& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && c.field() == nullptr;
        if (neg) cs = cs.substr(1);
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        bool mono = e.first || e.second;
        bool unit = cs == "1";
        if (!unit || !mono) {
            if (c.field() && mono) os << "(" << cs << ")";
            else os << cs;
        }
        bool star = !unit;
        auto var = [&](const char* name, int k) {
            if (!k) return;
            if (star) os << "*";
            os << name;
            if (k > 1) os << "^" << k;
            star = true;
        };
        var("u", e.first);
        var("v", e.second);
    }
    return os.str();
}

// If the tangent cone h (homogeneous of degree m >= 1) is c*L^m, returns g in
// coordinates where L becomes v, so blow_up follows the direction of L = 0.
std::optional<BiPoly> along_single_tangent(const BiPoly& g, const BiPoly& h, int m) {
    const FieldPtr f = g.field();
    Scalar a = h.coeff(m, 0);
    if (a.is_zero()) {
        if (h.terms().size() == 1 && !h.coeff(0, m).is_zero()) return g;
        return std::nullopt;
    }
    Scalar b = h.coeff(m - 1, 1) / (Scalar(m) * a);
    BiPoly l = linear_bipoly(Scalar::one(f), b, f), pw = bipoly_one(f);
    for (int k = 0; k < m; ++k) pw = pw * l;
    for (const auto& [e, c] : pw.terms())
        if (h.coeff(e.first, e.second) != a * c) return std::nullopt;
    if (h.terms().size() != pw.terms().size()) return std::nullopt;
    // L = u + b v; new coordinates (u', v') = (v, u + b v).
    return linear_substitute(g, -b, Scalar::one(f), Scalar::one(f), Scalar::zero(f));
}

// Directions (as g rewritten so the direction is v = 0) whose multiplicity in the
// tangent cone is at least `need`, restricted to directions over the working field.
std::vector<BiPoly> directions_with_multiplicity(const BiPoly& g, const BiPoly& h, int m, int need,
                                                 bool& unresolved) {
    const FieldPtr f = g.field();
    std::vector<BiPoly> out;
    unresolved = false;
    // h(1, s): roots s are directions v = s u.
    std::vector<Scalar> q(m + 1, Scalar::zero(f));
    for (const auto& [e, c] : h.terms()) q[e.second] = c;
    UniPoly qs(q, f);
    if (m - qs.degree() >= need) out.push_back(linear_substitute(g, Scalar::zero(f), Scalar::one(f), Scalar::one(f),
                                                                 Scalar::zero(f)));
    UniPoly r = qs;
    UniPoly d = qs;
    for (int k = 1; k < need && r.degree() > 0; ++k) {
        d = derivative(d);
        r = gcd(r, d);
    }
    if (r.degree() <= 0) return out;
    std::vector<Scalar> roots;
    if (r.degree() == 1) {
        UniPoly mr = r.monic();
        roots.push_back(-mr.coeff(0));
    } else if (!f && r.is_rational()) {
        for (const auto& fac : zpoly::factor(zpoly::from_unipoly(r)))
            if (zpoly::degree(fac.poly) == 1) roots.push_back(Scalar(Rational(-fac.poly[0], fac.poly[1])));
            else unresolved = true;
    } else {
        unresolved = true;
    }
    for (const auto& s : roots)
        out.push_back(linear_substitute(g, Scalar::one(f), Scalar::zero(f), s, Scalar::one(f)));
    return out;
}

}  // namespace

LocalExpansion expand_at(const PlaneCurve& f, const ProjPoint& p, const Tangent* tangent) {
    LocalExpansion e;
    e.g = local_expansion(f, local_frame(p, tangent));
    e.multiplicity = e.g.order();
    if (e.multiplicity < 0) throw DomainError("expand_at: zero polynomial");
    e.tangent_cone = homogeneous_part(e.g, e.multiplicity);
    return e;
}

int multiplicity_at(const PlaneCurve& f, const ProjPoint& p) {
    if (f.is_zero()) throw DomainError("multiplicity_at: zero polynomial");
    return expand_at(f, p).multiplicity;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Exact: return "EXACT";
        case Verdict::Worse: return "WORSE";
        case Verdict::Insufficient: return "INSUFFICIENT";
    }
    return "?";
}

ChainReport chain_verify(const PlaneCurve& f, const ProjPoint& p, const SingChain& c) {
    if (f.is_zero()) throw DomainError("chain_verify: zero polynomial");
    const auto& req = c.multiplicities();
    const Tangent* t = c.tangent();
    const bool free_dir = t && t->free;
    LocalExpansion e = expand_at(f, p, free_dir ? nullptr : t);
    ChainReport rep;
    rep.actual.push_back(e.multiplicity);
    rep.tangent_cone = bipoly_str(e.tangent_cone);
    bool worse = e.multiplicity > req[0], insufficient = e.multiplicity < req[0];
    std::ostringstream detail;
    BiPoly last = e.g;
    int mlast = e.multiplicity;

    if (req.size() == 2 && !worse && !insufficient) {
        std::vector<BiPoly> cands;
        if (free_dir) {
            bool unresolved = false;
            cands = directions_with_multiplicity(e.g, e.tangent_cone, e.multiplicity, std::max(req[1], 1), unresolved);
            if (unresolved) detail << "some tangent directions are not defined over the working field; ";
        } else {
            cands.push_back(e.g);
        }
        int best = -1;
        for (const auto& g : cands) {
            BiPoly s = blow_up(g, e.multiplicity);
            int m = s.order();
            if (m > best) {
                best = m;
                last = s;
            }
        }
        if (best < 0) {
            best = 0;
            detail << "no tangent direction of multiplicity " << req[1] << "; ";
        }
        rep.actual.push_back(best);
        mlast = best;
        if (best > req[1]) worse = true;
        if (best < req[1]) insufficient = true;
    }

    if (!worse && !insufficient && mlast >= 2) {
        BiPoly h = homogeneous_part(last, mlast);
        if (auto g = along_single_tangent(last, h, mlast)) {
            int next = blow_up(*g, mlast).order();
            rep.actual.push_back(next);
            if (next >= mlast) {
                worse = true;
                detail << "chain extends with an infinitely near point of multiplicity " << next << "; ";
            }
        }
    }
    rep.verdict = worse ? Verdict::Worse : (insufficient ? Verdict::Insufficient : Verdict::Exact);
    rep.detail = detail.str();
    if (!rep.detail.empty()) rep.detail.resize(rep.detail.size() - 2);
    return rep;
}

bool SchemeReport::exact() const {
    return std::all_of(items.begin(), items.end(), [](const ChainReport& r) { return r.verdict == Verdict::Exact; });
}

SchemeReport verify_scheme(const PlaneCurve& f, const Scheme& s) {
    SchemeReport r;
    for (const auto& it : s.items()) {
        r.names.push_back(it.name);
        r.items.push_back(chain_verify(f, it.point, it.chain));
    }
    return r;
}

namespace {

// Columns are points P, Q, R of small height; P and Q off the curve when asked.
std::vector<Matrix> coordinate_changes(int count) {
    std::vector<Matrix> out;
    out.push_back(Matrix::identity(3));
    for (int k = 1; static_cast<int>(out.size()) < count; ++k) {
        Matrix a = Matrix::identity(3);
        a.set(1, 0, Scalar(k));
        a.set(2, 0, Scalar(k * k + 1));
        a.set(0, 1, Scalar(-k));
        a.set(2, 1, Scalar(2 * k - 1));
        a.set(0, 2, Scalar(k + 2));
        a.set(1, 2, Scalar(1 - k));
        if (!determinant(a).is_zero()) out.push_back(a);
    }
    return out;
}

// A dehomogenization F(x, y) of f (after a coordinate change) with
// deg_x F = deg_y F = deg f and constant leading coefficients.
BiPoly balanced_chart(const PlaneCurve& f, std::string* how) {
    const Scalar zero = Scalar::zero(f.field()), one = Scalar::one(f.field());
    const Point3 e[3] = {{one, zero, zero}, {zero, one, zero}, {zero, zero, one}};
    Scalar v[3] = {f.evaluate(e[0]), f.evaluate(e[1]), f.evaluate(e[2])};
    // chart k keeps the other two variables in order
    for (int k : {2, 1, 0}) {
        int a = k == 0 ? 1 : 0, b = k == 2 ? 1 : 2;
        if (!v[a].is_zero() && !v[b].is_zero()) {
            if (how) *how = std::string("chart ") + "xyz"[k] + "=1";
            return f.dehomogenize(k);
        }
    }
    for (const auto& a : coordinate_changes(40)) {
        PlaneCurve g = f.substitute(a);
        Point3 c0{a(0, 0), a(1, 0), a(2, 0)}, c1{a(0, 1), a(1, 1), a(2, 1)};
        if (!f.evaluate(c0).is_zero() && !f.evaluate(c1).is_zero()) {
            if (how) *how = "after a linear change of coordinates";
            return g.dehomogenize(2);
        }
    }
    throw DomainError("no balanced dehomogenization found");
}

// Resultant with respect to the second variable, as a polynomial in the first.
UniPoly resultant_second(const BiPoly& a, const BiPoly& b, const FieldPtr& field) {
    const int ma = a.degree_second(), mb = b.degree_second();
    const int bound = std::max(a.total_degree(), 0) * std::max(b.total_degree(), 0);
    std::vector<Scalar> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        Scalar x(k % 2 ? (k + 1) / 2 : -(k / 2));
        xs.push_back(x);
        ys.push_back(resultant_formal(a.in_second(x), b.in_second(x), std::max(ma, 0), std::max(mb, 0)));
    }
    UniPoly r = interpolate(xs, ys);
    return r.is_zero() ? UniPoly(std::vector<Scalar>{}, field) : r;
}

UniPoly gcd_all(const std::vector<UniPoly>& ps) {
    UniPoly g;
    for (const auto& p : ps) g = gcd(g, p);
    return g;
}

bool is_singular(const PlaneCurve& f, const std::array<PlaneCurve, 3>& d, const Point3& p) {
    if (!f.evaluate(p).is_zero()) return false;
    for (const auto& g : d)
        if (!g.evaluate(p).is_zero()) return false;
    return true;
}

}  // namespace

bool is_squarefree(const PlaneCurve& f) {
    if (f.is_zero()) throw DomainError("is_squarefree: zero polynomial");
    const int n = f.degree();
    if (n <= 1) return true;
    BiPoly F = balanced_chart(f, nullptr);
    BiPoly Fx = F.partial(0);
    const int bound = n * (2 * n - 1);
    for (int k = 0; k <= bound; ++k) {
        Scalar y(k % 2 ? (k + 1) / 2 : -(k / 2));
        UniPoly a = F.in_first(y), b = Fx.in_first(y);
        if (!resultant_formal(a, b, n, n - 1).is_zero()) return true;
    }
    return false;
}

std::string SingularCandidate::chart() const {
    switch (kind) {
        case Kind::Point: return "point";
        case Kind::Abscissa: return "z=1";
        case Kind::Fibre: return "z=1, x=" + x_value.str();
        case Kind::Infinity: return "z=0, y=1";
    }
    return "?";
}

std::string SingularCandidate::str() const {
    std::ostringstream os;
    if (located()) os << point.str() << " multiplicity " << multiplicity;
    else
        os << "unlocated (" << chart() << "): " << factor.str(kind == Kind::Fibre ? "y" : "x") << " = 0 [multiplicity "
           << factor_multiplicity << "]";
    return os.str();
}

std::vector<SingularCandidate> singular_locus_scan(const PlaneCurve& f, const std::vector<ProjPoint>& hints) {
    if (!is_squarefree(f)) throw DomainError("singular_locus_scan: curve is not squarefree");
    const FieldPtr K = f.field();
    const std::array<PlaneCurve, 3> d{f.partial(0), f.partial(1), f.partial(2)};
    std::vector<SingularCandidate> out, loose;
    auto add_point = [&](const Point3& c) {
        ProjPoint p(c);
        for (const auto& o : out)
            if (o.point == p) return;
        SingularCandidate s;
        s.point = p;
        s.multiplicity = multiplicity_at(f, p);
        out.push_back(s);
    };
    for (const auto& h : hints)
        if (is_singular(f, d, h.coords())) add_point(h.coords());

    // Splits a univariate polynomial over the working field into linear roots
    // and leftover factors (with their multiplicity in p).
    auto split = [&](const UniPoly& p, std::vector<Scalar>& roots, std::vector<std::pair<UniPoly, int>>& rest,
                     const std::vector<Scalar>& known) {
        if (p.degree() <= 0) return;
        if (!K) {
            for (const auto& fac : zpoly::factor(zpoly::from_unipoly(p))) {
                if (zpoly::degree(fac.poly) == 1) roots.push_back(Scalar(Rational(-fac.poly[0], fac.poly[1])));
                else rest.emplace_back(zpoly::to_unipoly(fac.poly).monic(), fac.multiplicity);
            }
            return;
        }
        UniPoly q = p.monic();
        for (const auto& a : known) {
            UniPoly lin(std::vector<Scalar>{-a, Scalar::one(K)}, K);
            bool hit = false;
            while (q.degree() > 0 && (q % lin).is_zero()) {
                q = q / lin;
                hit = true;
            }
            if (hit) roots.push_back(a);
        }
        if (q.degree() <= 0) return;
        UniPoly sq = squarefree_part(q);
        if (sq.degree() == 1) roots.push_back(-sq.monic().coeff(0));
        else rest.emplace_back(sq, 1);
    };

    // Affine chart z = 1, eliminating y.
    const BiPoly F = f.dehomogenize(2), Fx = d[0].dehomogenize(2), Fy = d[1].dehomogenize(2);
    std::vector<UniPoly> res;
    if (f.degree() >= 2) {
        res.push_back(resultant_second(F, Fy, K));
        res.push_back(resultant_second(Fx, Fy, K));
        res.push_back(resultant_second(F, Fx, K));
    }
    UniPoly R = gcd_all(res);
    std::vector<Scalar> known_x;
    for (const auto& o : out)
        if (!o.point[2].is_zero()) known_x.push_back(o.point[0]);
    if (R.degree() > 0) {
        std::vector<Scalar> xs;
        std::vector<std::pair<UniPoly, int>> rest;
        split(R, xs, rest, known_x);
        for (const auto& a : xs) {
            UniPoly h = gcd_all({F.in_second(a), Fx.in_second(a), Fy.in_second(a)});
            if (h.degree() <= 0) continue;
            std::vector<Scalar> known_y;
            for (const auto& o : out)
                if (!o.point[2].is_zero() && o.point[0] == a) known_y.push_back(o.point[1]);
            std::vector<Scalar> ys;
            std::vector<std::pair<UniPoly, int>> yrest;
            split(h, ys, yrest, known_y);
            for (const auto& b : ys) add_point({a, b, Scalar::one(K)});
            for (auto& [g, m] : yrest) {
                SingularCandidate s;
                s.kind = SingularCandidate::Kind::Fibre;
                s.x_value = a;
                s.factor = g;
                s.factor_multiplicity = m;
                loose.push_back(s);
            }
        }
        for (auto& [g, m] : rest) {
            if (!K) {
                // Points of degree deg g: keep only if the fibre over a root is singular.
                std::vector<Rational> mp;
                UniPoly gm = g.monic();
                for (const auto& c : gm.coeffs()) mp.push_back(c.rational());
                FieldPtr L = make_field(mp, "a");
                Scalar alpha = Scalar::generator(L);
                UniPoly h = gcd_all({F.in_second(alpha), Fx.in_second(alpha), Fy.in_second(alpha)});
                if (h.degree() <= 0) continue;
            }
            SingularCandidate s;
            s.kind = SingularCandidate::Kind::Abscissa;
            s.factor = g;
            s.factor_multiplicity = m;
            loose.push_back(s);
        }
    }

    // Line at infinity, points [x, 1, 0].
    {
        auto at_inf = [&](const PlaneCurve& g) {
            std::vector<Scalar> c(g.degree() + 1, Scalar::zero(K));
            for (const auto& [m, v] : g.terms())
                if (m.ez == 0) c[m.ex] = v;
            return UniPoly(c, K);
        };
        UniPoly h = gcd_all({at_inf(f), at_inf(d[0]), at_inf(d[1]), at_inf(d[2])});
        if (h.degree() > 0) {
            std::vector<Scalar> known;
            for (const auto& o : out)
                if (o.point[2].is_zero() && !o.point[1].is_zero()) known.push_back(o.point[0]);
            std::vector<Scalar> xs;
            std::vector<std::pair<UniPoly, int>> rest;
            split(h, xs, rest, known);
            for (const auto& a : xs) add_point({a, Scalar::one(K), Scalar::zero(K)});
            for (auto& [g, m] : rest) {
                SingularCandidate s;
                s.kind = SingularCandidate::Kind::Infinity;
                s.factor = g;
                s.factor_multiplicity = m;
                loose.push_back(s);
            }
        }
        Point3 e0{Scalar::one(K), Scalar::zero(K), Scalar::zero(K)};
        if (is_singular(f, d, e0)) add_point(e0);
    }
    out.insert(out.end(), loose.begin(), loose.end());
    return out;
}

namespace {

UniPoly fibre(const PlaneCurve& f, const Scalar& a) { return f.dehomogenize(2).in_second(a); }

UniPoly on_infinity(const PlaneCurve& g) {
    std::vector<Scalar> c(g.degree() + 1, Scalar::zero(g.field()));
    for (const auto& [m, v] : g.terms())
        if (m.ez == 0) c[m.ex] = v;
    return UniPoly(c, g.field());
}

}  // namespace

Passage passes_through(const PlaneCurve& g, const PlaneCurve& f, const SingularCandidate& c) {
    using Kind = SingularCandidate::Kind;
    switch (c.kind) {
        case Kind::Point: return g.evaluate(c.point.coords()).is_zero() ? Passage::Passes : Passage::Avoids;
        case Kind::Fibre: return gcd(c.factor, fibre(g, c.x_value)).degree() > 0 ? Passage::Passes : Passage::Avoids;
        case Kind::Infinity: return gcd(c.factor, on_infinity(g)).degree() > 0 ? Passage::Passes : Passage::Avoids;
        case Kind::Abscissa: break;
    }
    const FieldPtr K = common_field(f.field(), g.field());
    const BiPoly G = g.dehomogenize(2), F = f.dehomogenize(2), Fx = f.partial(0).dehomogenize(2),
                 Fy = f.partial(1).dehomogenize(2);
    UniPoly s = gcd_all({c.factor, resultant_second(G, F, K), resultant_second(G, Fx, K), resultant_second(G, Fy, K)});
    if (s.degree() <= 0) return Passage::Avoids;
    if (K || !s.is_rational()) return Passage::Unknown;
    for (const auto& fac : zpoly::factor(zpoly::from_unipoly(s))) {
        UniPoly p = zpoly::to_unipoly(fac.poly).monic();
        std::vector<Rational> mp;
        for (const auto& x : p.coeffs()) mp.push_back(x.rational());
        Scalar alpha = zpoly::degree(fac.poly) == 1 ? Scalar(-mp[0]) : Scalar::generator(make_field(mp, "a"));
        if (gcd_all({F.in_second(alpha), Fx.in_second(alpha), Fy.in_second(alpha), G.in_second(alpha)}).degree() > 0)
            return Passage::Passes;
    }
    return Passage::Avoids;
}

int infinitely_near_multiplicity(const PlaneCurve& f, const ProjPoint& p, const PlaneCurve& direction) {
    Tangent t = Tangent::assigned(direction);
    LocalExpansion e = expand_at(f, p, &t);
    if (e.multiplicity == 0) return 0;
    return blow_up(e.g, e.multiplicity).order();
}

namespace {

modp::u64 reduce_scalar(const Scalar& s, modp::u64 p, modp::u64 root) {
    modp::u64 acc = 0, pw = 1;
    for (const auto& c : s.coeffs()) {
        acc = modp::add(acc, modp::mul(modp::reduce(c, p), pw, p), p);
        pw = modp::mul(pw, root, p);
    }
    return acc;
}

// A prime p and a root of the field's minimal polynomial modulo p.
bool embedding_mod_p(const FieldPtr& K, modp::u64 start, modp::u64& p, modp::u64& root) {
    p = start;
    for (int tries = 0; tries < 200; ++tries) {
        p = modp::next_prime(p + 1);
        if (!K) {
            root = 0;
            return true;
        }
        std::vector<modp::u64> c;
        bool bad = false;
        for (const auto& q : K->minimal_polynomial()) {
            if (mpz_divisible_ui_p(q.get_den_mpz_t(), p)) bad = true;
            else c.push_back(modp::reduce(q, p));
        }
        if (bad) continue;
        modp::Poly m(p, c);
        if (!modp::is_squarefree(m)) continue;
        for (const auto& fac : modp::factor_squarefree(m))
            if (fac.degree() == 1) {
                modp::Poly mf = fac.monic();
                root = modp::sub(0, mf.c[0], p);
                return true;
            }
    }
    return false;
}

struct GaoSystem {
    Matrix m;
    int unknowns = 0;
};

GaoSystem gao_system(const BiPoly& F, int n) {
    const FieldPtr K = F.field();
    const BiPoly Fx = F.partial(0), Fy = F.partial(1);
    const int side = 2 * n;
    auto row = [side](int i, int j) { return i * side + j; };
    std::vector<std::pair<int, int>> gmons, hmons;
    for (int i = 0; i <= n - 1; ++i)
        for (int j = 0; j <= n; ++j) gmons.emplace_back(i, j);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - 1; ++j) hmons.emplace_back(i, j);
    const int cols = static_cast<int>(gmons.size() + hmons.size());
    Matrix m(side * side, cols, K);
    auto acc = [&](int col, const BiPoly& P, int di, int dj, const Scalar& s) {
        for (const auto& [e, c] : P.terms()) {
            int r = row(e.first + di, e.second + dj);
            m.set(r, col, m(r, col) + s * c);
        }
    };
    int col = 0;
    // F*g_y - g*F_y
    for (auto [i, j] : gmons) {
        if (j > 0) acc(col, F, i, j - 1, Scalar(j));
        acc(col, Fy, i, j, Scalar(-1));
        ++col;
    }
    // -(F*h_x - h*F_x)
    for (auto [i, j] : hmons) {
        if (i > 0) acc(col, F, i - 1, j, Scalar(-i));
        acc(col, Fx, i, j, Scalar(1));
        ++col;
    }
    return {m, cols};
}

}  // namespace

int absolute_factor_count(const PlaneCurve& f, const FactorCountOptions& opt) {
    if (f.is_zero() || f.degree() < 1) throw DomainError("absolute_factor_count: degree must be at least 1");
    if (!is_squarefree(f)) throw DomainError("absolute_factor_count: curve is not squarefree");
    const int n = f.degree();
    BiPoly F = balanced_chart(f, nullptr);
    GaoSystem sys = gao_system(F, n);
    if (opt.allow_modp_certificate) {
        modp::u64 p = opt.prime ? opt.prime - 1 : (modp::u64(1) << 61), root = 0;
        for (int attempt = 0; attempt < 3; ++attempt) {
            if (!embedding_mod_p(f.field(), p, p, root)) break;
            // Rows are scaled by their common denominator so reduction is a ring map.
            modp::Matrix mm(p, sys.m.rows(), sys.m.cols());
            bool ok = true;
            for (int i = 0; i < sys.m.rows() && ok; ++i) {
                Integer den = 1;
                for (int j = 0; j < sys.m.cols(); ++j)
                    for (const auto& c : sys.m(i, j).coeffs())
                        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
                if (mpz_divisible_ui_p(den.get_mpz_t(), p)) ok = false;
                for (int j = 0; j < sys.m.cols() && ok; ++j) {
                    const Scalar& c = sys.m(i, j);
                    if (c.is_zero()) continue;
                    Scalar sc = c * Scalar(Rational(den));
                    mm.at(i, j) = reduce_scalar(sc, p, root);
                }
            }
            if (!ok) continue;
            // The pair (F_x, F_y) is always a solution, so a one-dimensional
            // kernel mod p pins the dimension over the field to 1.
            if (sys.unknowns - modp::rank(mm) == 1) return 1;
            break;
        }
    }
    return sys.unknowns - matrix_rank(sys.m);
}

int geometric_genus(int d, const Scheme& s) {
    int g = (d - 1) * (d - 2) / 2;
    for (const auto& it : s.items())
        for (int m : it.chain.multiplicities()) g -= m * (m - 1) / 2;
    if (g < 0) throw DomainError("geometric_genus: inconsistent declared data (negative genus)");
    return g;
}

}  // namespace godeaux
