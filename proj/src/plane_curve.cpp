#include "godeaux/plane_curve.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace godeaux {

std::vector<Monomial> monomials(int d) {
    std::vector<Monomial> out;
    out.reserve(monomial_count(d));
    for (int ex = d; ex >= 0; --ex)
        for (int ey = d - ex; ey >= 0; --ey) out.push_back({ex, ey, d - ex - ey});
    return out;
}

int monomial_index(const Monomial& m) {
    const int d = m.degree();
    return (d - m.ex) * (d - m.ex + 1) / 2 + (d - m.ex - m.ey);
}

// ---------------------------------------------------------------- BiPoly

Scalar BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void BiPoly::add(int i, int j, const Scalar& c) {
    if (c.is_zero()) return;
    if (c.field() && c.field() != field_) field_ = common_field(field_, c.field());
    auto [it, inserted] = terms_.emplace(Key{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int BiPoly::degree_first() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::degree_second() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

int BiPoly::order() const {
    int d = -1;
    for (const auto& [k, c] : terms_)
        if (d < 0 || k.first + k.second < d) d = k.first + k.second;
    return d;
}

Scalar BiPoly::eval(const Scalar& a, const Scalar& b) const {
    Scalar s = Scalar::zero(field_);
    for (const auto& [k, c] : terms_) s += c * a.pow(k.first) * b.pow(k.second);
    return s;
}

UniPoly BiPoly::in_second(const Scalar& a) const {
    std::vector<Scalar> c(std::max(0, degree_second() + 1), Scalar::zero(field_));
    for (const auto& [k, v] : terms_) c[k.second] += v * a.pow(k.first);
    return UniPoly(std::move(c), field_);
}

UniPoly BiPoly::in_first(const Scalar& b) const {
    std::vector<Scalar> c(std::max(0, degree_first() + 1), Scalar::zero(field_));
    for (const auto& [k, v] : terms_) c[k.first] += v * b.pow(k.second);
    return UniPoly(std::move(c), field_);
}

BiPoly BiPoly::partial(int var) const {
    BiPoly r(field_);
    for (const auto& [k, c] : terms_) {
        int e = var == 0 ? k.first : k.second;
        if (e == 0) continue;
        if (var == 0) r.add(k.first - 1, k.second, c * Scalar(e));
        else r.add(k.first, k.second - 1, c * Scalar(e));
    }
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r(common_field(a.field_, b.field_));
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
    return r;
}

// ------------------------------------------------------------ PlaneCurve

PlaneCurve::PlaneCurve(int degree, FieldPtr field) : degree_(degree), field_(std::move(field)) {
    if (degree < 0) throw DomainError("plane curve: negative degree");
}

PlaneCurve PlaneCurve::from_vector(int degree, const Vector& coeffs) {
    auto mons = monomials(degree);
    if (coeffs.size() != mons.size()) throw DomainError("plane curve: coefficient vector has wrong length");
    PlaneCurve f(degree);
    for (std::size_t i = 0; i < mons.size(); ++i) f.set(mons[i], coeffs[i]);
    return f;
}

PlaneCurve PlaneCurve::linear(const Scalar& a, const Scalar& b, const Scalar& c) {
    PlaneCurve f(1);
    f.set({1, 0, 0}, a);
    f.set({0, 1, 0}, b);
    f.set({0, 0, 1}, c);
    return f;
}

PlaneCurve PlaneCurve::variable(int k, FieldPtr field) {
    PlaneCurve f(1, field);
    f.set({k == 0, k == 1, k == 2}, Scalar::one(field));
    return f;
}

bool PlaneCurve::is_rational() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_rational()) return false;
    return true;
}

Scalar PlaneCurve::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void PlaneCurve::set(const Monomial& m, const Scalar& c) {
    if (m.degree() != degree_) throw DomainError("plane curve: monomial degree does not match curve degree");
    if (m.ex < 0 || m.ey < 0 || m.ez < 0) throw DomainError("plane curve: negative exponent");
    if (c.field() && c.field() != field_) field_ = common_field(field_, c.field());
    if (c.is_zero()) terms_.erase(m);
    else terms_[m] = c;
}

Vector PlaneCurve::to_vector() const {
    Vector v(monomial_count(degree_), Scalar::zero(field_));
    for (const auto& [m, c] : terms_) v[monomial_index(m)] = c;
    return v;
}

namespace {

std::vector<Scalar> powers(const Scalar& x, int n, const FieldPtr& f) {
    std::vector<Scalar> p(n + 1, Scalar::one(f));
    for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * x;
    return p;
}

// Dense homogeneous form of degree k indexed by monomial_index.
using Dense = std::vector<Scalar>;

Dense dense_mul(const Dense& a, int da, const Dense& b, int db, const FieldPtr& f) {
    Dense r(monomial_count(da + db), Scalar::zero(f));
    auto ma = monomials(da), mb = monomials(db);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            Monomial m{ma[i].ex + mb[j].ex, ma[i].ey + mb[j].ey, ma[i].ez + mb[j].ez};
            r[monomial_index(m)] += a[i] * b[j];
        }
    }
    return r;
}

}  // namespace

Scalar PlaneCurve::evaluate(const Point3& p) const {
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) throw DomainError("evaluate: point (0,0,0)");
    FieldPtr f = common_field(common_field(field_, p[0].field()), common_field(p[1].field(), p[2].field()));
    auto px = powers(p[0], degree_, f), py = powers(p[1], degree_, f), pz = powers(p[2], degree_, f);
    Scalar s = Scalar::zero(f);
    for (const auto& [m, c] : terms_) s += c * px[m.ex] * py[m.ey] * pz[m.ez];
    return s;
}

PlaneCurve PlaneCurve::partial(int var) const {
    if (degree_ == 0) return PlaneCurve(0, field_);
    PlaneCurve r(degree_ - 1, field_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0) continue;
        Monomial n = m;
        if (var == 0) --n.ex;
        else if (var == 1) --n.ey;
        else --n.ez;
        r.set(n, c * Scalar(e));
    }
    return r;
}

PlaneCurve PlaneCurve::substitute(const Matrix& A) const {
    if (A.rows() != 3 || A.cols() != 3) throw DomainError("substitute: matrix must be 3x3");
    if (determinant(A).is_zero()) throw DomainError("substitute: singular matrix");
    const FieldPtr f = common_field(field_, A.field());
    // Powers of the three linear forms L_k = sum_j A[k][j] x_j.
    std::array<std::vector<Dense>, 3> pw;
    for (int k = 0; k < 3; ++k) {
        Dense L(3);
        L[monomial_index({1, 0, 0})] = A(k, 0);
        L[monomial_index({0, 1, 0})] = A(k, 1);
        L[monomial_index({0, 0, 1})] = A(k, 2);
        pw[k].push_back(Dense{Scalar::one(f)});
        for (int e = 1; e <= degree_; ++e) pw[k].push_back(dense_mul(pw[k][e - 1], e - 1, L, 1, f));
    }
    Dense acc(monomial_count(degree_), Scalar::zero(f));
    for (const auto& [m, c] : terms_) {
        Dense t = dense_mul(pw[0][m.ex], m.ex, pw[1][m.ey], m.ey, f);
        t = dense_mul(t, m.ex + m.ey, pw[2][m.ez], m.ez, f);
        for (std::size_t i = 0; i < acc.size(); ++i)
            if (!t[i].is_zero()) acc[i] += c * t[i];
    }
    PlaneCurve r = from_vector(degree_, acc);
    r.field_ = common_field(r.field_, f);
    return r;
}

BiPoly PlaneCurve::dehomogenize(int chart) const {
    BiPoly b(field_);
    for (const auto& [m, c] : terms_) {
        int e[3] = {m.ex, m.ey, m.ez};
        int i = chart == 0 ? e[1] : e[0];
        int j = chart == 2 ? e[1] : e[2];
        b.add(i, j, c);
    }
    return b;
}

PlaneCurve PlaneCurve::normalize_integer() const {
    if (terms_.empty()) throw DomainError("normalize_integer: zero polynomial");
    Integer den = 1, num = 0;
    for (const auto& [m, c] : terms_) {
        const Rational& r = c.rational();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), r.get_num_mpz_t());
    }
    Rational s(den, num);
    s.canonicalize();
    if (terms_.begin()->second.rational() < 0) s = -s;
    PlaneCurve r(degree_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, Scalar(c.rational() * s));
    return r;
}

PlaneCurve PlaneCurve::monic() const {
    if (terms_.empty()) return *this;
    Scalar li = terms_.begin()->second.inverse();
    return *this * li;
}

ModpCurve PlaneCurve::reduce_mod_p(modp::u64 p) const {
    if (!modp::is_prime(p)) throw DomainError("reduce_mod_p: " + std::to_string(p) + " is not prime");
    ModpCurve r;
    r.degree = degree_;
    r.p = p;
    std::vector<std::string> bad;
    for (const auto& [m, c] : terms_) {
        const Rational& q = c.rational();
        if (modp::reduce(q.get_den(), p) == 0) {
            bad.push_back(q.get_den().get_str());
            continue;
        }
        modp::u64 v = modp::reduce(q, p);
        if (v) r.terms[m] = v;
    }
    if (!bad.empty()) {
        std::string msg = "reduce_mod_p: prime " + std::to_string(p) + " divides denominators";
        for (const auto& s : bad) msg += " " + s;
        throw DomainError(msg);
    }
    return r;
}

PlaneCurve PlaneCurve::operator-() const {
    PlaneCurve r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

PlaneCurve operator+(const PlaneCurve& a, const PlaneCurve& b) {
    if (a.degree_ != b.degree_) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        throw DomainError("adding plane curves of different degrees");
    }
    PlaneCurve r = a;
    for (const auto& [m, c] : b.terms_) r.set(m, r.coeff(m) + c);
    return r;
}

PlaneCurve operator-(const PlaneCurve& a, const PlaneCurve& b) { return a + (-b); }

PlaneCurve operator*(const PlaneCurve& a, const PlaneCurve& b) {
    PlaneCurve r(a.degree_ + b.degree_, common_field(a.field_, b.field_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{ma.ex + mb.ex, ma.ey + mb.ey, ma.ez + mb.ez};
            r.set(m, r.coeff(m) + ca * cb);
        }
    return r;
}

PlaneCurve operator*(const PlaneCurve& a, const Scalar& s) {
    PlaneCurve r(a.degree_, common_field(a.field_, s.field()));
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
    return r;
}

std::string PlaneCurve::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool compound = !c.is_rational();
        bool neg = !compound && c.rational() < 0;
        std::string cs = c.str();
        if (neg) cs = cs.substr(1);
        if (compound) cs = "(" + cs + ")";
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        bool unit = !compound && abs(c.rational()) == 1;
        std::string mono;
        const char* names[3] = {"x", "y", "z"};
        for (int k = 0; k < 3; ++k) {
            if (m[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[k];
            if (m[k] > 1) mono += "^" + std::to_string(m[k]);
        }
        if (mono.empty()) os << cs;
        else if (unit) os << mono;
        else os << cs << "*" << mono;
    }
    return os.str();
}

PlaneCurve divide_exact(const PlaneCurve& a, const PlaneCurve& b) {
    if (b.is_zero()) throw DivisionByZero("divide_exact: zero divisor");
    if (b.degree() > a.degree()) throw DomainError("divide_exact: divisor degree too large");
    FieldPtr f = common_field(a.field(), b.field());
    PlaneCurve r = a, q(a.degree() - b.degree(), f);
    const Monomial lb = b.terms().begin()->first;
    const Scalar li = b.terms().begin()->second.inverse();
    while (!r.is_zero()) {
        const Monomial lr = r.terms().begin()->first;
        Monomial m{lr.ex - lb.ex, lr.ey - lb.ey, lr.ez - lb.ez};
        if (m.ex < 0 || m.ey < 0 || m.ez < 0) throw DomainError("divide_exact: not divisible");
        PlaneCurve t(m.degree(), f);
        t.set(m, r.terms().begin()->second * li);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

std::string write_curve_text(const PlaneCurve& f) {
    std::ostringstream os;
    for (const auto& [m, c] : f.terms()) {
        if (c.is_rational()) os << c.rational().get_str();
        else os << "(" << c.str() << ")";
        os << ' ' << m.ex << ' ' << m.ey << ' ' << m.ez << '\n';
    }
    return os.str();
}

PlaneCurve read_curve_text(const std::string& text, const FieldPtr& field) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0, degree = -1;
    std::vector<std::pair<Monomial, Scalar>> terms;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto fail = [&](const std::string& what) {
            throw DomainError("curve text line " + std::to_string(lineno) + ": " + what);
        };
        if (tok.size() < 4) fail("expected 'coeff e_x e_y e_z'");
        int e[3];
        for (int k = 0; k < 3; ++k) {
            const std::string& s = tok[tok.size() - 3 + k];
            if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                fail("bad exponent '" + s + "'");
            e[k] = std::stoi(s);
        }
        std::string cs;
        for (std::size_t i = 0; i + 3 < tok.size(); ++i) cs += (i ? " " : "") + tok[i];
        Scalar c;
        try {
            c = parse_scalar(cs, field);
        } catch (const DomainError& err) {
            fail(err.what());
        }
        Monomial m{e[0], e[1], e[2]};
        if (degree < 0) degree = m.degree();
        else if (m.degree() != degree) fail("inconsistent degree");
        terms.emplace_back(m, c);
    }
    if (degree < 0) throw DomainError("curve text: no terms");
    PlaneCurve f(degree, field);
    for (auto& [m, c] : terms) {
        if (!f.coeff(m).is_zero()) throw DomainError("curve text: repeated monomial");
        f.set(m, c);
    }
    return f;
}

namespace {

using Poly3 = std::map<Monomial, Scalar, DescLex>;

class FormParser {
public:
    FormParser(const std::string& s, const FieldPtr& f) : s_(s), f_(f) {}

    Poly3 parse() {
        Poly3 v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("malformed form '" + s_ + "': " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    static void add_into(Poly3& a, const Poly3& b, bool negate) {
        for (const auto& [m, c] : b) {
            Scalar v = negate ? -c : c;
            auto [it, ins] = a.emplace(m, v);
            if (!ins) {
                it->second += v;
                if (it->second.is_zero()) a.erase(it);
            }
        }
    }
    static Poly3 mul(const Poly3& a, const Poly3& b) {
        Poly3 r;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                Monomial m{ma.ex + mb.ex, ma.ey + mb.ey, ma.ez + mb.ez};
                add_into(r, Poly3{{m, ca * cb}}, false);
            }
        return r;
    }
    Poly3 expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly3 v;
        add_into(v, term(), neg);
        while (true) {
            if (eat('+')) add_into(v, term(), false);
            else if (eat('-')) add_into(v, term(), true);
            else break;
        }
        return v;
    }
    Poly3 term() {
        Poly3 v = factor();
        while (true) {
            if (eat('*')) v = mul(v, factor());
            else if (eat('/')) {
                Poly3 d = factor();
                if (d.size() != 1 || d.begin()->first.degree() != 0) fail("division by a non-constant");
                Scalar iv = d.begin()->second.inverse();
                for (auto& [m, c] : v) c *= iv;
            } else break;
        }
        return v;
    }
    Poly3 factor() {
        Poly3 b = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            Poly3 r{{Monomial{0, 0, 0}, Scalar::one(f_)}};
            for (int i = 0; i < e; ++i) r = mul(r, b);
            return r;
        }
        return b;
    }
    Poly3 atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (eat('(')) {
            Poly3 v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Scalar v(Rational(Integer(s_.substr(start, pos_ - start))));
            if (v.is_zero()) return {};
            return {{Monomial{0, 0, 0}, v}};
        }
        if (std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "x") return {{Monomial{1, 0, 0}, Scalar::one(f_)}};
            if (name == "y") return {{Monomial{0, 1, 0}, Scalar::one(f_)}};
            if (name == "z") return {{Monomial{0, 0, 1}, Scalar::one(f_)}};
            if (f_ && name == f_->generator()) return {{Monomial{0, 0, 0}, Scalar::generator(f_)}};
            fail("unknown symbol '" + name + "'");
        }
        fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }

    const std::string& s_;
    FieldPtr f_;
    std::size_t pos_ = 0;
};

}  // namespace

PlaneCurve parse_form(const std::string& text, const FieldPtr& field) {
    Poly3 p = FormParser(text, field).parse();
    if (p.empty()) throw DomainError("form '" + text + "' is zero");
    int d = p.begin()->first.degree();
    PlaneCurve f(d, field);
    for (const auto& [m, c] : p) {
        if (m.degree() != d) throw DomainError("form '" + text + "' is not homogeneous");
        f.set(m, c);
    }
    return f;
}

// -------------------------------------------------------------- involution

Point3 point_apply(const Matrix& m, const Point3& p) {
    Point3 r;
    for (int i = 0; i < 3; ++i) {
        Scalar s = Scalar::zero(common_field(m.field(), p[i].field()));
        for (int j = 0; j < 3; ++j) s += m(i, j) * p[j];
        r[i] = s;
    }
    return r;
}

ProjInvolution::ProjInvolution(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != 3 || m_.cols() != 3) throw DomainError("involution: matrix must be 3x3");
    Matrix sq = m_ * m_;
    Scalar lambda = sq(0, 0);
    if (lambda.is_zero()) throw DomainError("involution: M^2 is not a nonzero scalar matrix");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (sq(i, j) != (i == j ? lambda : Scalar(0)))
                throw DomainError("involution: M^2 is not a nonzero scalar matrix");
}

Point3 ProjInvolution::apply(const Point3& p) const { return point_apply(m_, p); }

PlaneCurve ProjInvolution::act(const PlaneCurve& f) const { return f.substitute(m_); }

bool ProjInvolution::is_identity() const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !m_(i, j).is_zero()) return false;
    return m_(0, 0) == m_(1, 1) && m_(1, 1) == m_(2, 2);
}

namespace {

bool rational_sqrt(const Rational& q, Rational& r) {
    if (q < 0) return false;
    Integer a = q.get_num(), b = q.get_den();
    if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t())) return false;
    Integer sa, sb;
    mpz_sqrt(sa.get_mpz_t(), a.get_mpz_t());
    mpz_sqrt(sb.get_mpz_t(), b.get_mpz_t());
    r = Rational(sa, sb);
    r.canonicalize();
    return true;
}

}  // namespace

EigenSplit eigen_split(int d, const ProjInvolution& inv) {
    const Matrix& M = inv.matrix();
    const FieldPtr f = M.field();
    const int N = monomial_count(d);
    auto mons = monomials(d);
    EigenSplit out;
    auto unit = [&](int i) {
        Vector v(N, Scalar::zero(f));
        v[i] = Scalar::one(f);
        return v;
    };
    if (inv.is_identity()) {
        for (int i = 0; i < N; ++i) out.plus.push_back(unit(i));
        return out;
    }
    bool diagonal = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !M(i, j).is_zero()) diagonal = false;
    if (diagonal) {
        // The repeated diagonal entry is the eigenvalue of the fixed line.
        Scalar mu = M(0, 0) == M(1, 1) || M(0, 0) == M(2, 2) ? M(0, 0) : M(1, 1);
        for (int i = 0; i < N; ++i) {
            int odd = 0;
            for (int k = 0; k < 3; ++k)
                if (M(k, k) != mu) odd += mons[i][k];
            (odd % 2 == 0 ? out.plus : out.minus).push_back(unit(i));
        }
        return out;
    }
    Scalar lambda = (M * M)(0, 0);
    if (!lambda.is_rational()) throw DomainError("eigen_split: eigenvalues not in the field (unsupported)");
    Rational r;
    if (!rational_sqrt(lambda.rational(), r))
        throw DomainError("eigen_split: eigenvalues +-sqrt(" + lambda.str() + ") not in the field (unsupported)");
    // Eigenvalue with a 2-dimensional eigenspace.
    Scalar mu(r);
    auto shifted = [&](const Scalar& s) {
        Matrix a = M;
        for (int i = 0; i < 3; ++i) a.set(i, i, M(i, i) - s);
        return a;
    };
    if (matrix_rank(shifted(mu)) != 1) mu = -mu;
    if (matrix_rank(shifted(mu)) != 1) throw DomainError("eigen_split: matrix is not a projective involution");
    auto Eplus = kernel_basis(shifted(mu));
    auto Eminus = kernel_basis(shifted(-mu));
    Matrix P(3, 3, f);
    for (int i = 0; i < 3; ++i) {
        P.set(i, 0, Eplus[0][i]);
        P.set(i, 1, Eplus[1][i]);
        P.set(i, 2, Eminus[0][i]);
    }
    Matrix Pinv = inverse(P);
    // In the coordinates x' = P^{-1} x the action is diag(1,1,-1) up to scale.
    for (int i = 0; i < N; ++i) {
        PlaneCurve m(d, f);
        m.set(mons[i], Scalar::one(f));
        Vector v = m.substitute(Pinv).to_vector();
        (mons[i].ez % 2 == 0 ? out.plus : out.minus).push_back(std::move(v));
    }
    return out;
}

}  // namespace godeaux
