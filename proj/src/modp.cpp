#include "godeaux/modp.hpp"

#include "godeaux/field.hpp"

#include <algorithm>
#include <random>

namespace godeaux::modp {

u64 pow(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw DivisionByZero("inverse of 0 mod p");
    // Extended Euclid on signed 128-bit values.
    __int128 r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1) {
        __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw DomainError("non-invertible residue mod " + std::to_string(p));
    s0 %= static_cast<__int128>(p);
    if (s0 < 0) s0 += p;
    return static_cast<u64>(s0);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mul(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

u64 next_prime(u64 n) {
    while (!is_prime(n)) ++n;
    return n;
}

u64 reduce(const mpz_class& v, u64 p) {
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

u64 reduce(const mpq_class& v, u64 p) {
    u64 d = reduce(v.get_den(), p);
    if (d == 0)
        throw DomainError("prime " + std::to_string(p) + " divides denominator " + v.get_den().get_str());
    return mul(reduce(v.get_num(), p), inv(d, p), p);
}

Poly::Poly(u64 prime, std::vector<u64> coeffs) : p(prime), c(std::move(coeffs)) {
    for (auto& x : c) x %= p;
    trim();
}

Poly Poly::from_integers(const std::vector<mpz_class>& coeffs, u64 prime) {
    Poly r;
    r.p = prime;
    r.c.reserve(coeffs.size());
    for (const auto& v : coeffs) r.c.push_back(reduce(v, prime));
    r.trim();
    return r;
}

Poly Poly::monomial(u64 prime, int k, u64 coeff) {
    Poly r;
    r.p = prime;
    r.c.assign(k + 1, 0);
    r.c[k] = coeff % prime;
    r.trim();
    return r;
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::monic() const {
    if (c.empty()) return *this;
    return scale(*this, inv(lead(), p));
}

u64 Poly::eval(u64 x) const {
    u64 r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = add(mul(r, x, p), c[i], p);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.p = a.p;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = add(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0, a.p);
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.p = a.p;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = sub(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0, a.p);
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    r.p = a.p;
    if (a.is_zero() || b.is_zero()) return r;
    const u64 p = a.p;
    std::vector<unsigned __int128> acc(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            acc[i + j] += static_cast<unsigned __int128>(a.c[i]) * b.c[j];
            if (acc[i + j] >> 120) acc[i + j] %= p;
        }
    }
    r.c.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r.c[i] = static_cast<u64>(acc[i] % p);
    r.trim();
    return r;
}

Poly scale(const Poly& a, u64 s) {
    Poly r = a;
    for (auto& x : r.c) x = mul(x, s, a.p);
    r.trim();
    return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero mod p");
    const u64 p = a.p;
    r = a;
    q = Poly();
    q.p = p;
    if (a.degree() < b.degree()) return;
    q.c.assign(a.degree() - b.degree() + 1, 0);
    const u64 li = inv(b.lead(), p);
    const int db = b.degree();
    for (int k = r.degree(); k >= db; --k) {
        u64 coef = mul(r.c[k], li, p);
        if (coef == 0) continue;
        q.c[k - db] = coef;
        for (int i = 0; i <= db; ++i) r.c[k - db + i] = sub(r.c[k - db + i], mul(coef, b.c[i], p), p);
    }
    r.trim();
    q.trim();
}

Poly operator%(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    return r;
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    return q;
}

Poly derivative(const Poly& a) {
    Poly r;
    r.p = a.p;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mul(a.c[i], i % a.p, a.p);
    r.trim();
    return r;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
    const u64 p = a.p;
    Poly r0 = a, r1 = b, s0(p, {1}), s1(p, {}), t0(p, {}), t1(p, {1});
    while (!r1.is_zero()) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = s0;
        t = t0;
        return r0;
    }
    u64 li = inv(r0.lead(), p);
    s = scale(s0, li);
    t = scale(t0, li);
    return scale(r0, li);
}

Poly powmod(const Poly& base, mpz_class e, const Poly& m) {
    Poly result(m.p, {1});
    result = result % m;
    Poly b = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
    }
    return result;
}

bool is_squarefree(const Poly& f) {
    if (f.degree() <= 0) return true;
    Poly d = derivative(f);
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

namespace {

// Distinct-degree factorization: pairs (product of all irreducible factors of degree k, k).
std::vector<std::pair<Poly, int>> ddf(Poly f) {
    std::vector<std::pair<Poly, int>> out;
    const u64 p = f.p;
    f = f.monic();
    Poly x = Poly::monomial(p, 1);
    Poly h = x % f;
    for (int k = 1; 2 * k <= f.degree(); ++k) {
        h = powmod(h, mpz_class(static_cast<unsigned long>(p)), f);
        Poly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, k);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

void edf(const Poly& f, int k, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == k) {
        out.push_back(f.monic());
        return;
    }
    const u64 p = f.p;
    const int n = f.degree();
    while (true) {
        std::vector<u64> c(n);
        for (auto& v : c) v = rng() % p;
        Poly a(p, c);
        if (a.degree() <= 0) continue;
        Poly g;
        if (p == 2) {
            // Trace map a + a^2 + ... + a^(2^(k-1)).
            Poly t = a % f, acc = t;
            for (int i = 1; i < k; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            g = gcd(f, acc);
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
            e = (e - 1) / 2;
            Poly b = powmod(a, e, f) - Poly(p, {1});
            g = gcd(f, b);
        }
        if (g.degree() > 0 && g.degree() < n) {
            edf(g, k, rng, out);
            edf(f / g, k, rng, out);
            return;
        }
    }
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
}

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.degree() <= 0) return false;
    if (!is_squarefree(f)) return false;
    auto parts = ddf(f);
    return parts.size() == 1 && parts[0].second == f.degree();
}

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed) {
    std::vector<Poly> out;
    if (f.degree() <= 0) return out;
    std::mt19937_64 rng(seed);
    for (auto& [g, k] : ddf(f)) edf(g, k, rng, out);
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<int> factor_degrees(const Poly& f) {
    std::vector<int> out;
    for (auto& [g, k] : ddf(f))
        for (int i = 0; i < g.degree() / k; ++i) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(Matrix& m, bool reduce_above) {
    const u64 p = m.p;
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        u64 iv = inv(m.at(r, col), p);
        for (int j = col; j < m.cols; ++j) m.at(r, j) = mul(m.at(r, j), iv, p);
        for (int i = reduce_above ? 0 : r + 1; i < m.rows; ++i) {
            if (i == r) continue;
            u64 f = m.at(i, col);
            if (!f) continue;
            for (int j = col; j < m.cols; ++j) m.at(i, j) = sub(m.at(i, j), mul(f, m.at(r, j), p), p);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(echelon(m, false).size()); }

std::vector<std::vector<u64>> kernel(Matrix m) {
    auto piv = echelon(m, true);
    std::vector<char> is_piv(m.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<u64>> out;
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<u64> v(m.cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = sub(0, m.at(static_cast<int>(i), f), m.p);
        out.push_back(std::move(v));
    }
    return out;
}

u64 determinant(Matrix m) {
    if (m.rows != m.cols) throw DomainError("determinant of a non-square matrix");
    const u64 p = m.p;
    u64 det = 1;
    for (int col = 0; col < m.cols; ++col) {
        int piv = -1;
        for (int i = col; i < m.rows; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = sub(0, det, p);
        }
        det = mul(det, m.at(col, col), p);
        u64 iv = inv(m.at(col, col), p);
        for (int i = col + 1; i < m.rows; ++i) {
            u64 f = mul(m.at(i, col), iv, p);
            if (!f) continue;
            for (int j = col; j < m.cols; ++j) m.at(i, j) = sub(m.at(i, j), mul(f, m.at(col, j), p), p);
        }
    }
    return det;
}

}  // namespace godeaux::modp
