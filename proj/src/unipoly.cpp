#include "godeaux/unipoly.hpp"

#include "godeaux/matrix.hpp"
#include "godeaux/zpoly.hpp"

#include <sstream>

namespace godeaux {

UniPoly::UniPoly(std::vector<Scalar> coeffs, FieldPtr field) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const auto& s : c_)
        if (s.field() && s.field() != field_) field_ = common_field(field_, s.field());
    trim();
}

UniPoly UniPoly::from_rationals(const std::vector<Rational>& coeffs) {
    std::vector<Scalar> c(coeffs.begin(), coeffs.end());
    return UniPoly(std::move(c));
}

UniPoly UniPoly::x(FieldPtr field) {
    return UniPoly({Scalar::zero(field), Scalar::one(field)}, field);
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly({c}, c.field()); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar::zero(field_);
    return c_[k];
}

const Scalar& UniPoly::lead() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

bool UniPoly::is_rational() const {
    for (const auto& s : c_)
        if (!s.is_rational()) return false;
    return true;
}

Scalar UniPoly::eval(const Scalar& x) const {
    Scalar r = Scalar::zero(field_);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    Scalar li = lead().inverse();
    return *this * li;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar::zero(common_field(a.field_, b.field_)));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c), common_field(a.field_, b.field_));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, common_field(a.field_, b.field_));
    FieldPtr f = common_field(a.field_, b.field_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(f));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c), f);
}

UniPoly operator*(const UniPoly& a, const Scalar& s) {
    std::vector<Scalar> c = a.c_;
    for (auto& x : c) x *= s;
    return UniPoly(std::move(c), common_field(a.field_, s.field()));
}

std::string UniPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Scalar& s = c_[i];
        if (s.is_zero()) continue;
        std::string cs = s.str();
        bool compound = !s.is_rational();
        bool neg = !compound && s.rational() < 0;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (neg) cs = cs.substr(1);
        if (compound) cs = "(" + cs + ")";
        bool unit = !compound && abs(s.rational()) == 1;
        if (i == 0) os << cs;
        else {
            if (!unit) os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    FieldPtr f = common_field(a.field(), b.field());
    std::vector<Scalar> rc = a.coeffs();
    const int db = b.degree();
    std::vector<Scalar> qc(std::max(0, a.degree() - db + 1), Scalar::zero(f));
    Scalar li = b.lead().inverse();
    for (int k = a.degree(); k >= db; --k) {
        if (rc[k].is_zero()) continue;
        Scalar coef = rc[k] * li;
        qc[k - db] = coef;
        for (int i = 0; i <= db; ++i)
            if (!b.coeffs()[i].is_zero()) rc[k - db + i] -= coef * b.coeffs()[i];
    }
    q = UniPoly(std::move(qc), f);
    r = UniPoly(std::move(rc), f);
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    return r;
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    return q;
}

UniPoly derivative(const UniPoly& f) {
    if (f.degree() <= 0) return UniPoly({}, f.field());
    std::vector<Scalar> c;
    for (int i = 1; i <= f.degree(); ++i) c.push_back(f.coeffs()[i] * Scalar(i));
    return UniPoly(std::move(c), f.field());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_rational() && b.is_rational() && !common_field(a.field(), b.field())) {
        return zpoly::to_unipoly(zpoly::gcd(zpoly::from_unipoly(a), zpoly::from_unipoly(b))).monic();
    }
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Scalar resultant(const UniPoly& f0, const UniPoly& g0) {
    if (f0.is_zero() || g0.is_zero()) throw DomainError("resultant of a zero polynomial");
    FieldPtr fld = common_field(f0.field(), g0.field());
    UniPoly f = f0, g = g0;
    Scalar acc = Scalar::one(fld);
    while (true) {
        const int m = f.degree(), n = g.degree();
        if (n == 0) return acc * g.lead().pow(static_cast<unsigned>(m));
        if (m == 0) return acc * f.lead().pow(static_cast<unsigned>(n));
        UniPoly r = f % g;
        if (r.is_zero()) return Scalar::zero(fld);
        // res(f,g) = (-1)^{mn} lc(g)^{m - deg r} res(g, r)
        if ((static_cast<long>(m) * n) % 2) acc = -acc;
        acc *= g.lead().pow(static_cast<unsigned>(m - r.degree()));
        f = std::move(g);
        g = std::move(r);
    }
}

Scalar resultant_formal(const UniPoly& f, const UniPoly& g, int m, int n) {
    if (f.degree() > m || g.degree() > n) throw DomainError("resultant_formal: formal degree too small");
    const int N = m + n;
    const FieldPtr fld = common_field(f.field(), g.field());
    if (N == 0) return Scalar::one(fld);
    if (fld) {
        // Over a number field the remainder sequence is much cheaper than the determinant.
        if (f.is_zero() || g.is_zero()) return Scalar::zero(fld);
        const int df = f.degree(), dg = g.degree();
        if (df < m && dg < n) return Scalar::zero(fld);
        if (df < m) {
            Scalar r = g.lead().pow(static_cast<unsigned>(m - df)) * resultant(f, g);
            return (static_cast<long>(m - df) * n) % 2 ? -r : r;
        }
        return f.lead().pow(static_cast<unsigned>(n - dg)) * resultant(f, g);
    }
    Matrix s(N, N, common_field(f.field(), g.field()));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s.set(i, i + k, f.coeff(m - k));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s.set(n + i, i + k, g.coeff(n - k));
    return determinant(s);
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree_part of the zero polynomial");
    if (f.degree() == 0) return UniPoly::constant(Scalar::one(f.field()));
    if (f.is_rational() && !f.field()) return zpoly::to_unipoly(zpoly::squarefree_part(zpoly::from_unipoly(f))).monic();
    UniPoly g = gcd(f, derivative(f));
    return (f / g).monic();
}

UniPoly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
    if (xs.size() != ys.size()) throw DomainError("interpolate: size mismatch");
    const std::size_t n = xs.size();
    std::vector<Scalar> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            Scalar den = xs[i] - xs[i - j];
            if (den.is_zero()) throw DomainError("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / den;
            if (i == j) break;
        }
    // Horner on the Newton form.
    UniPoly p;
    for (std::size_t k = n; k-- > 0;) {
        p = p * UniPoly({-xs[k], Scalar(1)}) + UniPoly::constant(dd[k]);
    }
    return p;
}

}  // namespace godeaux
