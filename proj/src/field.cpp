#include "godeaux/field.hpp"

#include "godeaux/modp.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace godeaux {

NumberField::NumberField(std::vector<Rational> minimal_polynomial, std::string generator)
    : minpoly_(std::move(minimal_polynomial)), generator_(std::move(generator)) {
    while (!minpoly_.empty() && minpoly_.back() == 0) minpoly_.pop_back();
    if (minpoly_.size() < 2) throw DomainError("number field: minimal polynomial must have degree >= 1");
    Rational lc = minpoly_.back();
    for (auto& c : minpoly_) c /= lc;
    degree_ = static_cast<int>(minpoly_.size()) - 1;

    // t^n = -sum_{i<n} m_i t^i, then multiply by t repeatedly.
    const int n = degree_;
    std::vector<Rational> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = -minpoly_[i];
    reduction_.push_back(cur);
    for (int k = n + 1; k <= 2 * n - 2; ++k) {
        std::vector<Rational> next(n);
        Rational top = cur[n - 1];
        for (int i = n - 1; i >= 1; --i) next[i] = cur[i - 1];
        next[0] = 0;
        if (top != 0)
            for (int i = 0; i < n; ++i) next[i] -= top * minpoly_[i];
        reduction_.push_back(next);
        cur = std::move(next);
    }
}

bool NumberField::same_as(const NumberField& other) const {
    return minpoly_ == other.minpoly_;
}

bool NumberField::looks_irreducible_mod_p() const {
    Integer den = 1;
    for (const auto& c : minpoly_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : minpoly_) ints.push_back(Integer(c * den));
    for (std::uint64_t p : {10007ULL, 10009ULL, 10037ULL, 10039ULL, 10061ULL, 10067ULL, 10069ULL,
                            10079ULL, 10091ULL, 10093ULL}) {
        if (mpz_divisible_ui_p(den.get_mpz_t(), p)) continue;
        auto f = modp::Poly::from_integers(ints, p);
        if (f.degree() != degree_) continue;
        if (!modp::is_squarefree(f)) continue;
        if (modp::is_irreducible(f)) return true;
    }
    return false;
}

std::string NumberField::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree_; i >= 0; --i) {
        const Rational& c = minpoly_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << generator_;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

FieldPtr make_field(std::vector<Rational> minimal_polynomial, std::string generator) {
    return std::make_shared<const NumberField>(std::move(minimal_polynomial), std::move(generator));
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a == b || a->same_as(*b)) return a;
    throw DomainError("mixed-field arithmetic: Q[t]/(" + a->str() + ") vs Q[t]/(" + b->str() + ")");
}

Scalar::Scalar(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
    for (auto& c : coeffs) c.canonicalize();
    if (field_ && field_->degree() == 1) {
        // Q[t]/(t - a) is Q itself; keep values canonical.
        Rational v = 0, tp = 1, a = -field_->minimal_polynomial()[0];
        for (const auto& c : coeffs) {
            v += c * tp;
            tp *= a;
        }
        coeffs_ = {v};
        return;
    }
    const int n = field_ ? field_->degree() : 1;
    if (!field_) {
        if (coeffs.size() > 1)
            for (std::size_t i = 1; i < coeffs.size(); ++i)
                if (coeffs[i] != 0) throw DomainError("scalar: polynomial residue requires a number field");
        coeffs_ = {coeffs.empty() ? Rational(0) : coeffs[0]};
        return;
    }
    // Reduce a representative of arbitrary length.
    std::vector<Rational> c = std::move(coeffs);
    const auto& m = field_->minimal_polynomial();
    for (int k = static_cast<int>(c.size()) - 1; k >= n; --k) {
        if (c[k] == 0) continue;
        Rational top = c[k];
        for (int i = 0; i < n; ++i) c[k - n + i] -= top * m[i];
        c[k] = 0;
    }
    c.resize(n);
    coeffs_ = std::move(c);
}

Scalar Scalar::zero(const FieldPtr& field) {
    if (!field || field->degree() == 1) return Scalar();
    return Scalar(field, std::vector<Rational>(field->degree()));
}

Scalar Scalar::one(const FieldPtr& field) {
    Scalar s = zero(field);
    s.coeffs_[0] = 1;
    return s;
}

Scalar Scalar::generator(const FieldPtr& field) {
    if (!field) throw DomainError("generator of Q requested");
    return Scalar(field, {Rational(0), Rational(1)});
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

const Rational& Scalar::rational() const {
    if (!is_rational()) throw DomainError("scalar " + str() + " is not rational");
    return coeffs_[0];
}

Scalar Scalar::in_field(const FieldPtr& field) const {
    if (!field || field->degree() == 1) {
        if (!field_) return *this;
        return Scalar(rational());
    }
    if (field_) {
        common_field(field_, field);
        return *this;
    }
    Scalar s = zero(field);
    s.coeffs_[0] = coeffs_[0];
    return s;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.field_ && !field_ && o.coeffs_.size() > 1) {
        Scalar r = o;
        r.coeffs_[0] += coeffs_[0];
        return *this = std::move(r);
    }
    if (field_ && o.field_) common_field(field_, o.field_);
    if (coeffs_.size() >= o.coeffs_.size()) {
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (o.coeffs_.size() == 1) {
        if (field_ && o.field_) common_field(field_, o.field_);
        if (o.coeffs_[0] == 1) return *this;
        for (auto& c : coeffs_) c *= o.coeffs_[0];
        if (!field_) field_ = o.field_;
        return *this;
    }
    if (coeffs_.size() == 1) {
        Scalar r = o;
        if (field_) common_field(field_, o.field_);
        if (coeffs_[0] != 1)
            for (auto& c : r.coeffs_) c *= coeffs_[0];
        return *this = std::move(r);
    }
    const FieldPtr f = common_field(field_, o.field_);
    const int n = f->degree();
    std::vector<Rational> prod(2 * n - 1);
    mpq_class t;
    for (int i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (o.coeffs_[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), coeffs_[i].get_mpq_t(), o.coeffs_[j].get_mpq_t());
            prod[i + j] += t;
        }
    }
    for (int k = n; k <= 2 * n - 2; ++k) {
        if (prod[k] == 0) continue;
        const auto& red = f->power_residue(k);
        for (int i = 0; i < n; ++i)
            if (red[i] != 0) prod[i] += prod[k] * red[i];
    }
    prod.resize(n);
    coeffs_ = std::move(prod);
    field_ = f;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    if (o.coeffs_.size() == 1) {
        if (field_ && o.field_) common_field(field_, o.field_);
        for (auto& c : coeffs_) c /= o.coeffs_[0];
        return *this;
    }
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.coeffs_.size() == b.coeffs_.size()) {
        if (a.field_ && b.field_ && a.field_ != b.field_ && !a.field_->same_as(*b.field_)) return false;
        return a.coeffs_ == b.coeffs_;
    }
    const Scalar& small = a.coeffs_.size() < b.coeffs_.size() ? a : b;
    const Scalar& big = a.coeffs_.size() < b.coeffs_.size() ? b : a;
    if (small.coeffs_.size() != 1) return false;
    return big.is_rational() && big.coeffs_[0] == small.coeffs_[0];
}

Scalar Scalar::pow(unsigned e) const {
    Scalar result = Scalar::one(field_);
    Scalar base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// r = a mod b; q = a div b (b nonzero, trimmed).
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    const int db = static_cast<int>(b.size()) - 1;
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        const int k = static_cast<int>(r.size()) - 1 - db;
        Rational c = r.back() / b.back();
        q[k] = c;
        for (int i = 0; i <= db; ++i) r[k + i] -= c * b[i];
        trim(r);
    }
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    // a - q*b
    QPoly res = a;
    if (!q.empty() && !b.empty()) {
        if (res.size() < q.size() + b.size() - 1) res.resize(q.size() + b.size() - 1);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) res[i + j] -= q[i] * b[j];
        }
    }
    trim(res);
    return res;
}

}  // namespace

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (coeffs_.size() == 1) return Scalar(field_, {1 / coeffs_[0]}).in_field(field_);
    // Extended Euclid: s*x + t*m = g; need g constant.
    QPoly r0 = field_->minimal_polynomial(), r1 = coeffs_;
    trim(r1);
    QPoly s0, s1{Rational(1)};  // coefficients of x
    while (!r1.empty()) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1)
        throw DomainError("element " + str() + " is not invertible: minimal polynomial " + field_->str() +
                          " is reducible");
    for (auto& c : s0) c /= r0[0];
    return Scalar(field_, s0);
}

Scalar nf_invert(const Scalar& x) { return x.inverse(); }

std::string Scalar::str() const {
    if (coeffs_.size() == 1) return coeffs_[0].get_str();
    std::ostringstream os;
    bool first = true;
    const std::string& g = field_->generator();
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << g;
        if (i >= 2) os << "^" << i;
    }
    if (first) return "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw DomainError("malformed rational: empty");
    std::size_t i = 0;
    if (t[i] == '+' || t[i] == '-') ++i;
    bool seen_digit = false, seen_slash = false;
    for (; i < t.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(t[i]))) seen_digit = true;
        else if (t[i] == '/' && seen_digit && !seen_slash) {
            seen_slash = true;
            seen_digit = false;
        } else throw DomainError("malformed rational '" + text + "'");
    }
    if (!seen_digit) throw DomainError("malformed rational '" + text + "'");
    if (t[0] == '+') t.erase(0, 1);
    Rational r;
    if (r.set_str(t, 10) != 0) throw DomainError("malformed rational '" + text + "'");
    if (r.get_den() == 0) throw DomainError("malformed rational '" + text + "': zero denominator");
    r.canonicalize();
    return r;
}

namespace {

// Recursive-descent parser for scalar expressions in the field generator.
class ScalarParser {
public:
    ScalarParser(const std::string& s, const FieldPtr& f) : s_(s), f_(f) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("malformed scalar '" + s_ + "': " + what);
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
    Scalar expr() {
        Scalar v;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        v = term();
        if (neg) v = -v;
        while (true) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else break;
        }
        return v;
    }
    Scalar term() {
        Scalar v = factor();
        while (true) {
            if (eat('*')) v *= factor();
            else if (eat('/')) {
                Scalar d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else break;
        }
        return v;
    }
    Scalar factor() {
        Scalar b = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return b;
    }
    Scalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(Rational(Integer(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (f_ && name == f_->generator()) return Scalar::generator(f_);
            fail("unknown symbol '" + name + "'");
        }
        fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }

    const std::string& s_;
    FieldPtr f_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text, const FieldPtr& field) {
    return ScalarParser(text, field).parse().in_field(field);
}

}  // namespace godeaux
