#include "godeaux/linear_system.hpp"

#include "godeaux/curve_verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

namespace godeaux {

namespace {

bool same_line(const PlaneCurve& a, const PlaneCurve& b) { return a.monic() == b.monic(); }

bool same_chain(const SingChain& a, const SingChain& b) {
    if (a.multiplicities() != b.multiplicities()) return false;
    for (std::size_t i = 0; i < a.tangents().size(); ++i) {
        const auto& ta = a.tangents()[i];
        const auto& tb = b.tangents()[i];
        if (ta.free != tb.free) return false;
        if (!ta.free && !same_line(ta.line, tb.line)) return false;
    }
    return true;
}

SingChain image_chain(const SingChain& c, const ProjInvolution& inv) {
    std::vector<Tangent> ts;
    for (const auto& t : c.tangents()) ts.push_back(t.free ? t : Tangent::assigned(inv.act(t.line)));
    return SingChain::virtual_chain(c.multiplicities(), ts);
}

Matrix project_rows(const Matrix& rows, const std::vector<Vector>& basis) {
    const int k = static_cast<int>(basis.size());
    Matrix out(0, k, rows.field());
    for (int i = 0; i < rows.rows(); ++i) {
        Vector r = rows.row(i), pr(k);
        for (int j = 0; j < k; ++j) pr[j] = dot(r, basis[j]);
        out.append_row(pr);
    }
    return out;
}

}  // namespace

LinearSystem assemble(int d, const Scheme& s, const std::optional<Symmetry>& sym) {
    if (d < 0) throw DomainError("assemble: negative degree");
    LinearSystem ls;
    ls.degree = d;
    ls.scheme = s;
    ls.symmetry = sym;
    const int N = monomial_count(d);
    FieldPtr f = s.field();
    if (sym) {
        f = common_field(f, sym->involution.matrix().field());
        auto split = eigen_split(d, sym->involution);
        ls.basis = sym->plus ? split.plus : split.minus;
    }
    ls.matrix = Matrix(0, sym ? static_cast<int>(ls.basis.size()) : N, f);

    std::vector<SchemeItem> implied;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const SchemeItem& it = s[i];
        if (sym) {
            const ProjInvolution& inv = sym->involution;
            ProjPoint img(inv.apply(it.point.coords()));
            SingChain ichain = image_chain(it.chain, inv);
            int j = s.find(img);
            if (j >= 0) {
                if (!same_chain(s[j].chain, ichain))
                    throw DomainError("scheme is not stable under the involution at point " + it.name + " " +
                                      it.point.str() + ": its image " + img.str() + " carries a different chain");
                if (j < static_cast<int>(i)) continue;  // orbit already represented
            } else {
                implied.push_back({it.name + "'", img, ichain});
            }
        }
        Matrix rows = conditions(d, it.point, it.chain);
        if (sym) rows = project_rows(rows, ls.basis);
        ls.matrix.append_rows(rows);
        ls.row_owner.insert(ls.row_owner.end(), rows.rows(), it.name);
    }
    ls.full_scheme = s;
    for (auto& it : implied)
        if (ls.full_scheme.find(it.point) < 0) ls.full_scheme.add(std::move(it));
    return ls;
}

int dimension(const LinearSystem& ls) {
    return ls.matrix.cols() - matrix_rank(ls.matrix) - 1;
}

std::optional<int> dimension_mod_p(const LinearSystem& ls, std::uint64_t p) {
    if (!ls.matrix.is_rational() || !modp::is_prime(p)) return std::nullopt;
    modp::Matrix m(p, 0, 0);
    try {
        m = reduce_mod_p(ls.matrix, p);
    } catch (const DomainError&) {
        return std::nullopt;
    }
    return ls.matrix.cols() - modp::rank(m) - 1;
}

std::vector<PlaneCurve> solve_basis(const LinearSystem& ls) {
    auto ker = kernel_basis(ls.matrix);
    const int N = monomial_count(ls.degree);
    std::vector<PlaneCurve> out;
    for (const auto& w : ker) {
        Vector v;
        if (ls.symmetry) {
            v.assign(N, Scalar::zero(ls.matrix.field()));
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (w[j].is_zero()) continue;
                for (int k = 0; k < N; ++k)
                    if (!ls.basis[j][k].is_zero()) v[k] += w[j] * ls.basis[j][k];
            }
        } else v = w;
        PlaneCurve c = PlaneCurve::from_vector(ls.degree, v);
        c = c.is_rational() ? c.normalize_integer() : c.monic();
        Vector cv = c.to_vector();
        for (const auto& it : ls.full_scheme.items()) {
            Matrix rows = conditions(ls.degree, it.point, it.chain);
            for (const auto& r : rows.apply(cv))
                if (!r.is_zero())
                    throw std::logic_error("solve_basis: solution violates the conditions at " + it.name);
        }
        out.push_back(std::move(c));
    }
    return out;
}

PlaneCurve solve_unique(const LinearSystem& ls) {
    int dim = dimension(ls);
    if (dim != 0) throw ContractError("solve_unique: system has dimension " + std::to_string(dim) + ", not 0");
    return solve_basis(ls).front();
}

ProjPoint ParamScheme::point_at(const Scalar& t) const {
    Point3 p = base;
    p[coord] = t;
    return ProjPoint(p);
}

Scheme ParamScheme::at(const Scalar& t) const {
    Scheme s = fixed;
    s.add({name, point_at(t), chain});
    return s;
}

UniPoly LocusResult::proper_locus() const {
    UniPoly p = UniPoly::constant(Scalar(1));
    for (const auto& f : factors)
        if (!f.degenerate && f.certified) p = p * zpoly::to_unipoly(f.poly);
    return p.monic();
}

namespace {

// Rank-drop engine: constant rows C and parametric rows R(t) with entries of
// degree <= entry_degree in t.
struct Engine {
    Matrix constant;
    std::function<Matrix(const Scalar&)> rows_at;
    int entry_degree = 0;
};

struct EngineResult {
    bool everything = false;
    zpoly::ZPoly gcd;  // empty when the locus is empty (gcd = 1 is {1})
    int constant_rank = 0, kernel_dim = 0, param_rows = 0, samples = 0;
};

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

long binomial_capped(int n, int k, long cap) {
    long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

EngineResult run_engine(const Engine& e, const LocusOptions& opt) {
    EngineResult res;
    const int N = e.constant.cols();
    std::vector<Vector> K;
    if (e.constant.rows() > 0) K = kernel_basis(e.constant);
    else
        for (int j = 0; j < N; ++j) {
            Vector v(N, Scalar(0));
            v[j] = Scalar(1);
            K.push_back(v);
        }
    const int k = static_cast<int>(K.size());
    res.kernel_dim = k;
    res.constant_rank = N - k;
    if (k == 0) {
        res.gcd = {Integer(1)};
        return res;
    }
    Matrix probe = e.rows_at(Scalar(0));
    const int r = probe.rows();
    res.param_rows = r;
    if (r < k) {
        res.everything = true;
        return res;
    }
    const int D = k * e.entry_degree;
    const int samples = D + 1;
    res.samples = samples;

    // Which square combinations of the r x k matrix to take.
    std::vector<Matrix> combos;  // each k x r, or empty meaning "row subset"
    std::vector<std::vector<int>> row_sets;
    if (r == k) row_sets.push_back(subsets(r, k).front());
    else if (binomial_capped(r, k, 64) <= 64) row_sets = subsets(r, k);
    else {
        std::mt19937_64 rng(opt.seed);
        for (int c = 0; c < 3; ++c) {
            Matrix q(k, r);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < r; ++j) q.set(i, j, Scalar(static_cast<long>(rng() % 101) - 50));
            combos.push_back(q);
        }
    }
    const std::size_t nminors = row_sets.empty() ? combos.size() : row_sets.size();

    std::vector<Scalar> ts(samples);
    for (int j = 0; j < samples; ++j) ts[j] = Scalar((j % 2 ? 1 : -1) * static_cast<long>((j + 1) / 2));
    std::vector<std::vector<Scalar>> values(nminors, std::vector<Scalar>(samples));

    Matrix Kt(N, k);
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < N; ++i) Kt.set(i, c, K[c][i]);

    auto work = [&](int j) {
        Matrix M = e.rows_at(ts[j]) * Kt;
        for (std::size_t m = 0; m < nminors; ++m) {
            Matrix sq(k, k);
            if (!row_sets.empty()) {
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) sq.set(a, b, M(row_sets[m][a], b));
            } else sq = combos[m] * M;
            values[m][j] = determinant(sq);
        }
    };
    const int threads = std::max(1, opt.threads);
    if (threads == 1) {
        for (int j = 0; j < samples; ++j) work(j);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (int j = w; j < samples; j += threads) work(j);
            });
        for (auto& th : pool) th.join();
    }

    zpoly::ZPoly g;
    for (std::size_t m = 0; m < nminors; ++m) {
        UniPoly p = interpolate(ts, values[m]);
        if (p.is_zero()) continue;
        zpoly::ZPoly z = zpoly::from_unipoly(p);
        g = g.empty() ? z : zpoly::gcd(g, z);
        if (zpoly::degree(g) == 0) break;
    }
    if (g.empty()) {
        res.everything = true;
        return res;
    }
    res.gcd = zpoly::primitive(g);
    return res;
}

std::vector<LocusFactor> factor_locus(const zpoly::ZPoly& g) {
    std::vector<LocusFactor> out;
    for (const auto& f : zpoly::factor(g)) {
        LocusFactor lf;
        lf.poly = f.poly;
        lf.multiplicity = f.multiplicity;
        out.push_back(lf);
    }
    return out;
}

UniPoly squarefree_product(const std::vector<LocusFactor>& fs) {
    UniPoly p = UniPoly::constant(Scalar(1));
    for (const auto& f : fs) p = p * zpoly::to_unipoly(f.poly);
    return p.monic();
}

// Root of the factor as a field element: rational for degree 1, else the generator.
Scalar root_of(const zpoly::ZPoly& f) {
    if (zpoly::degree(f) == 1) return Scalar(Rational(-f[0], f[1]));
    std::vector<Rational> m(f.begin(), f.end());
    return Scalar::generator(make_field(m, "t"));
}

Point3 standard(int k) { return {Scalar(k == 0), Scalar(k == 1), Scalar(k == 2)}; }

Scalar det3(const Point3& a, const Point3& b, const Point3& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Matrix frame_from(const Point3& c0, const Point3& c1, const Point3& c2) {
    Matrix A(3, 3);
    for (int r = 0; r < 3; ++r) {
        A.set(r, 0, c0[r]);
        A.set(r, 1, c1[r]);
        A.set(r, 2, c2[r]);
    }
    return A;
}

bool divisible(const PlaneCurve& f, const PlaneCurve& line) {
    try {
        divide_exact(f, line);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

SingChain assigned_placeholder(const SingChain& c) {
    std::vector<Tangent> ts;
    for (std::size_t i = 0; i < c.tangents().size(); ++i) ts.push_back(Tangent::assigned(PlaneCurve::variable(0)));
    return SingChain::virtual_chain(c.multiplicities(), ts);
}

}  // namespace

LocusResult rank_drop_locus(int d, const ParamScheme& ps, const LocusOptions& opt) {
    for (int k = 0; k < 3; ++k)
        if (!ps.base[k].is_rational()) throw DomainError("rank_drop_locus: moving point must have rational data");
    if (!ps.base[ps.coord].is_zero()) throw DomainError("rank_drop_locus: base coordinate at the parameter must be 0");
    if (ps.fixed.field()) throw DomainError("rank_drop_locus: fixed scheme must be rational");
    if (ps.chain.has_free_tangent()) throw DomainError("rank_drop_locus: moving chain must have assigned tangents");

    const Point3 ec = standard(ps.coord);
    Point3 col1;
    bool found = false;
    if (const Tangent* t = ps.chain.tangent()) {
        if (!t->line.evaluate(ec).is_zero() || !t->line.evaluate(ps.base).is_zero())
            throw DomainError("rank_drop_locus: tangent " + t->line.str() + " must contain the moving point for all t");
        for (int j = 0; j < 3 && !found; ++j)
            if (!t->line.evaluate(standard(j)).is_zero()) {
                col1 = standard(j);
                found = true;
            }
    } else {
        for (int j = 0; j < 3 && !found; ++j)
            if (j != ps.coord && !det3(ec, standard(j), ps.base).is_zero()) {
                col1 = standard(j);
                found = true;
            }
    }
    if (!found) throw DomainError("rank_drop_locus: degenerate moving point");

    Engine e;
    e.constant = assemble(d, ps.fixed).matrix;
    e.entry_degree = d;
    e.rows_at = [&](const Scalar& t) {
        Point3 p = ps.base;
        p[ps.coord] = t;
        return conditions_in_frame(d, frame_from(ec, col1, p), ps.chain);
    };
    EngineResult er = run_engine(e, opt);

    LocusResult res;
    res.everything = er.everything;
    res.constant_rank = er.constant_rank;
    res.kernel_dim = er.kernel_dim;
    res.param_rows = er.param_rows;
    res.samples = er.samples;
    if (er.everything) return res;
    res.factors = factor_locus(er.gcd);
    res.squarefree = squarefree_product(res.factors);

    for (auto& lf : res.factors) {
        // Collision of the moving point with a fixed point.
        if (zpoly::degree(lf.poly) == 1) {
            Scalar t0 = root_of(lf.poly);
            ProjPoint p = ps.point_at(t0);
            int j = ps.fixed.find(p);
            if (j >= 0) {
                lf.degenerate = true;
                lf.reason = ps.name + " coincides with " + ps.fixed[j].name;
            }
        }
        if (!opt.certify || lf.degenerate) continue;
        Scalar t0 = root_of(lf.poly);
        LinearSystem ls = assemble(d, ps.at(t0));
        lf.dimension = dimension(ls);
        lf.certified = lf.dimension >= 0;
        if (!lf.certified) continue;
        // A tangent line of the moving chain splitting off from every solution.
        for (const auto& t : ps.chain.tangents()) {
            if (t.free) continue;
            bool all_contain = true;
            for (const auto& c : solve_basis(ls))
                if (!divisible(c, t.line)) {
                    all_contain = false;
                    break;
                }
            if (all_contain) {
                lf.degenerate = true;
                lf.reason = "every solution contains the tangent line " + t.line.str() + " as a component";
                break;
            }
        }
        if (lf.degenerate || zpoly::degree(lf.poly) > opt.reduced_check_max_degree) continue;
        // Non-reduced curves are closed in the system, so one generic member decides.
        auto sols = solve_basis(ls);
        PlaneCurve generic = sols[0];
        for (std::size_t k = 1; k < sols.size(); ++k) generic = generic + sols[k] * Scalar(static_cast<long>(k + 1));
        if (!is_squarefree(generic)) {
            lf.degenerate = true;
            lf.reason = "the general solution is non-reduced";
        }
    }
    return res;
}

FreeTangentLocus free_tangent_locus(int d, const Scheme& s, std::size_t index, const LocusOptions& opt) {
    if (index >= s.size()) throw DomainError("free_tangent_locus: item index out of range");
    const SchemeItem& item = s[index];
    if (item.chain.length() != 2 || !item.chain.has_free_tangent())
        throw DomainError("free_tangent_locus: item " + item.name + " has no free tangent");
    if (item.point.field()) throw DomainError("free_tangent_locus: point must be rational");
    Scheme fixed;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i != index) fixed.add(s[i]);

    const Point3& p = item.point.coords();
    int last = 2;
    while (p[last].is_zero()) --last;
    const int i0 = last == 0 ? 1 : 0;
    const int i1 = last == 2 ? 1 : 2;
    FreeTangentLocus out;
    out.b0 = standard(i0);
    out.b1 = standard(i1);
    const SingChain chain = assigned_placeholder(item.chain);

    Engine e;
    e.constant = assemble(d, fixed).matrix;
    e.entry_degree = d;
    e.rows_at = [&](const Scalar& sv) {
        Point3 dir{out.b0[0] + sv * out.b1[0], out.b0[1] + sv * out.b1[1], out.b0[2] + sv * out.b1[2]};
        return conditions_in_frame(d, frame_from(dir, out.b1, p), chain);
    };
    EngineResult er = run_engine(e, opt);
    out.everything = er.everything;

    auto tangent_line = [&](const Point3& dir) {
        Point3 l{p[1] * dir[2] - p[2] * dir[1], p[2] * dir[0] - p[0] * dir[2], p[0] * dir[1] - p[1] * dir[0]};
        return PlaneCurve::linear(l[0], l[1], l[2]);
    };
    auto with_tangent = [&](const PlaneCurve& line) {
        Scheme sp = fixed;
        sp.add({item.name, item.point, SingChain(item.chain.multiplicities(), {Tangent::assigned(line)})});
        return sp;
    };
    {
        Matrix m = e.constant;
        m.append_rows(conditions_in_frame(d, frame_from(out.b1, out.b0, p), chain));
        out.at_infinity = m.cols() - matrix_rank(m) - 1 >= 0;
    }
    if (er.everything) return out;
    out.factors = factor_locus(er.gcd);
    out.squarefree = squarefree_product(out.factors);
    for (auto& lf : out.factors) {
        if (!opt.certify) continue;
        Scalar s0 = root_of(lf.poly);
        Point3 dir{out.b0[0] + s0 * out.b1[0], out.b0[1] + s0 * out.b1[1], out.b0[2] + s0 * out.b1[2]};
        LinearSystem ls = assemble(d, with_tangent(tangent_line(dir)));
        lf.dimension = dimension(ls);
        lf.certified = lf.dimension >= 0;
    }
    return out;
}

}  // namespace godeaux
