#include "godeaux/scheme.hpp"

#include <sstream>

namespace godeaux {

ProjPoint::ProjPoint(const Point3& coords) : c_(coords) {
    int last = -1;
    for (int k = 2; k >= 0; --k)
        if (!c_[k].is_zero()) {
            last = k;
            break;
        }
    if (last < 0) throw DomainError("projective point (0,0,0)");
    Scalar iv = c_[last].inverse();
    for (auto& s : c_) s *= iv;
}

FieldPtr ProjPoint::field() const {
    return common_field(common_field(c_[0].field(), c_[1].field()), c_[2].field());
}

std::string ProjPoint::str() const {
    return "[" + c_[0].str() + ", " + c_[1].str() + ", " + c_[2].str() + "]";
}

SingChain::SingChain(std::vector<int> multiplicities, std::vector<Tangent> tangents)
    : m_(std::move(multiplicities)), t_(std::move(tangents)) {
    if (m_.empty() || m_.size() > 2) throw DomainError("singularity chain must have length 1 or 2");
    for (int m : m_)
        if (m < 1) throw DomainError("singularity chain multiplicities must be positive");
    if (m_.size() == 2 && m_[1] > m_[0]) throw DomainError("singularity chain must be non-increasing");
    if (t_.size() != m_.size() - 1) throw DomainError("singularity chain: one tangent per infinitely near point");
    for (const auto& t : t_)
        if (!t.free && t.line.degree() != 1) throw DomainError("chain tangent must be a line");
}

SingChain SingChain::virtual_chain(std::vector<int> multiplicities, std::vector<Tangent> tangents) {
    SingChain c;
    c.m_ = std::move(multiplicities);
    c.t_ = std::move(tangents);
    if (c.m_.empty() || c.m_.size() > 2) throw DomainError("virtual chain must have length 1 or 2");
    for (int m : c.m_)
        if (m < 0) throw DomainError("virtual chain multiplicities must be nonnegative");
    if (c.t_.size() != c.m_.size() - 1) throw DomainError("virtual chain: one tangent per infinitely near point");
    return c;
}

bool SingChain::has_free_tangent() const {
    for (const auto& t : t_)
        if (t.free) return true;
    return false;
}

std::string SingChain::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m_.size(); ++i) os << (i ? "," : "") << m_[i];
    os << "]";
    return os.str();
}

void Scheme::add(SchemeItem item) {
    if (find(item.point) >= 0)
        throw DomainError("scheme: duplicate point " + item.point.str() + " (" + item.name + ")");
    for (const auto& t : item.chain.tangents())
        if (!t.free && !t.line.evaluate(item.point.coords()).is_zero())
            throw DomainError("scheme: tangent " + t.line.str() + " does not pass through " + item.name + " " +
                              item.point.str());
    items_.push_back(std::move(item));
}

int Scheme::find(const ProjPoint& p) const {
    for (std::size_t i = 0; i < items_.size(); ++i)
        if (items_[i].point == p) return static_cast<int>(i);
    return -1;
}

FieldPtr Scheme::field() const {
    FieldPtr f;
    for (const auto& it : items_) {
        f = common_field(f, it.point.field());
        for (const auto& t : it.chain.tangents())
            if (!t.free) f = common_field(f, t.line.field());
    }
    return f;
}

namespace {

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_null(const std::array<Scalar, 3>& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

}  // namespace

Matrix local_frame(const ProjPoint& p, const Tangent* tangent) {
    const FieldPtr f = p.field();
    const Point3& pc = p.coords();
    std::array<Scalar, 3> col0, col1;
    if (tangent && !tangent->free) {
        const PlaneCurve& l = tangent->line;
        if (l.degree() != 1) throw DomainError("local_frame: tangent is not a line");
        if (!l.evaluate(pc).is_zero())
            throw DomainError("local_frame: tangent " + l.str() + " does not pass through " + p.str());
        std::array<Scalar, 3> a{l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1})};
        std::array<std::array<Scalar, 3>, 3> cands{{{a[1], -a[0], Scalar(0)},
                                                     {a[2], Scalar(0), -a[0]},
                                                     {Scalar(0), a[2], -a[1]}}};
        bool found = false;
        for (const auto& c : cands)
            if (!is_null(c) && !is_null(cross(c, pc))) {
                col0 = c;
                found = true;
                break;
            }
        if (!found) throw DomainError("local_frame: degenerate tangent");
        found = false;
        for (int k = 0; k < 3 && !found; ++k)
            if (!a[k].is_zero()) {
                col1 = {Scalar(k == 0), Scalar(k == 1), Scalar(k == 2)};
                found = true;
            }
    } else {
        int last = 2;
        while (pc[last].is_zero()) --last;
        int i = last == 0 ? 1 : 0;
        int j = last == 2 ? 1 : 2;
        col0 = {Scalar(i == 0), Scalar(i == 1), Scalar(i == 2)};
        col1 = {Scalar(j == 0), Scalar(j == 1), Scalar(j == 2)};
    }
    Matrix A(3, 3, f);
    for (int r = 0; r < 3; ++r) {
        A.set(r, 0, col0[r]);
        A.set(r, 1, col1[r]);
        A.set(r, 2, pc[r]);
    }
    return A;
}

BiPoly local_expansion(const PlaneCurve& f, const Matrix& frame) {
    return f.substitute(frame).dehomogenize(2);
}

namespace {

using Trunc = std::vector<Scalar>;  // indexed by local_index, total degree < order

Trunc trunc_mul(const Trunc& a, const Trunc& b, int order, const FieldPtr& f) {
    Trunc r(a.size(), Scalar::zero(f));
    for (int da = 0; da < order; ++da)
        for (int ja = 0; ja <= da; ++ja) {
            const Scalar& x = a[local_index(da - ja, ja)];
            if (x.is_zero()) continue;
            for (int db = 0; da + db < order; ++db)
                for (int jb = 0; jb <= db; ++jb) {
                    const Scalar& y = b[local_index(db - jb, jb)];
                    if (y.is_zero()) continue;
                    r[local_index(da - ja + db - jb, ja + jb)] += x * y;
                }
        }
    return r;
}

}  // namespace

std::vector<Vector> local_monomial_series(int d, const Matrix& A, int order) {
    const FieldPtr f = A.field();
    const int T = order * (order + 1) / 2;
    std::array<std::vector<Trunc>, 3> pw;
    for (int k = 0; k < 3; ++k) {
        Trunc L(T, Scalar::zero(f));
        L[local_index(0, 0)] = A(k, 2);
        if (order > 1) {
            L[local_index(1, 0)] = A(k, 0);
            L[local_index(0, 1)] = A(k, 1);
        }
        Trunc one(T, Scalar::zero(f));
        one[0] = Scalar::one(f);
        pw[k].push_back(one);
        for (int e = 1; e <= d; ++e) pw[k].push_back(trunc_mul(pw[k][e - 1], L, order, f));
    }
    auto mons = monomials(d);
    std::vector<Vector> out;
    out.reserve(mons.size());
    for (const auto& m : mons) {
        Trunc t = trunc_mul(pw[0][m.ex], pw[1][m.ey], order, f);
        out.push_back(trunc_mul(t, pw[2][m.ez], order, f));
    }
    return out;
}

std::vector<std::pair<int, int>> condition_indices(const SingChain& c) {
    std::vector<std::pair<int, int>> idx;
    const auto& m = c.multiplicities();
    for (int s = 0; s < m[0]; ++s)
        for (int j = 0; j <= s; ++j) idx.emplace_back(s - j, j);
    if (m.size() == 2) {
        for (int s = 0; s < m[1]; ++s)
            for (int b = 0; b <= s; ++b) {
                int a = s - b;
                int i = a + m[0] - b;
                if (i < 0) continue;
                idx.emplace_back(i, b);
            }
    }
    return idx;
}

Matrix conditions_in_frame(int d, const Matrix& frame, const SingChain& c) {
    if (c.has_free_tangent())
        throw DomainError("conditions: FREE tangent directions do not give linear conditions; use free_tangent_locus");
    auto idx = condition_indices(c);
    const int N = monomial_count(d);
    Matrix rows(0, N, frame.field());
    if (idx.empty()) return rows;
    int order = 0;
    for (auto [i, j] : idx) order = std::max(order, i + j + 1);
    auto series = local_monomial_series(d, frame, order);
    for (auto [i, j] : idx) {
        Vector r(N);
        for (int k = 0; k < N; ++k) r[k] = series[k][local_index(i, j)];
        rows.append_row(r);
    }
    return rows;
}

Matrix conditions(int d, const ProjPoint& p, const SingChain& c) {
    return conditions_in_frame(d, local_frame(p, c.tangent()), c);
}

int expected_conditions(const SingChain& c) {
    int n = 0;
    for (int m : c.multiplicities()) n += m * (m + 1) / 2;
    for (const auto& t : c.tangents())
        if (t.free) --n;
    return n;
}

int virtual_dimension(int d, const Scheme& s) {
    int v = d * (d + 3) / 2;
    for (const auto& it : s.items()) v -= expected_conditions(it.chain);
    return v;
}

}  // namespace godeaux
