#include "godeaux/zpoly.hpp"

#include "godeaux/modp.hpp"

#include <algorithm>
#include <numeric>

namespace godeaux::zpoly {

using modp::u64;

void trim(ZPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

Integer content(const ZPoly& f) {
    Integer g = 0;
    for (const auto& c : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive(const ZPoly& f0) {
    ZPoly f = f0;
    trim(f);
    if (f.empty()) return f;
    Integer g = content(f);
    if (sgn(f.back()) < 0) g = -g;
    for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return f;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(c);
    return c;
}

ZPoly derivative(const ZPoly& f) {
    ZPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

bool divide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    ZPoly r = a;
    trim(r);
    q.clear();
    const int db = degree(b);
    if (degree(r) < db) {
        if (r.empty()) return true;
        return false;
    }
    q.assign(r.size() - b.size() + 1, Integer(0));
    Integer qc, rem;
    for (int k = degree(r); k >= db; --k) {
        if (sgn(r[k]) == 0) continue;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r[k].get_mpz_t(), b.back().get_mpz_t());
        if (sgn(rem) != 0) return false;
        q[k - db] = qc;
        for (int i = 0; i <= db; ++i) mpz_submul(r[k - db + i].get_mpz_t(), qc.get_mpz_t(), b[i].get_mpz_t());
    }
    trim(r);
    trim(q);
    return r.empty();
}

ZPoly from_unipoly(const UniPoly& f) {
    Integer den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
    ZPoly z;
    for (const auto& c : f.coeffs()) z.push_back(c.rational().get_num() * (den / c.rational().get_den()));
    return primitive(z);
}

UniPoly to_unipoly(const ZPoly& f) {
    std::vector<Scalar> c;
    for (const auto& v : f) c.emplace_back(v);
    return UniPoly(std::move(c));
}

namespace {

modp::Poly reduce(const ZPoly& f, u64 p) { return modp::Poly::from_integers(f, p); }

// Symmetric residue in (-m/2, m/2].
Integer symmetric(const Integer& v, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

constexpr u64 kGcdPrimeStart = 2147483659ULL;  // > 2^31

}  // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
    ZPoly a = primitive(a0), b = primitive(b0);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (degree(a) == 0 || degree(b) == 0) return {Integer(1)};
    Integer lcg;
    mpz_gcd(lcg.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    int best_deg = std::min(degree(a), degree(b)) + 1;
    ZPoly acc;
    Integer modulus;
    ZPoly last_candidate;
    u64 p = kGcdPrimeStart;
    while (true) {
        p = modp::next_prime(p + 1);
        if (modp::reduce(lcg, p) == 0) continue;
        modp::Poly ap = reduce(a, p), bp = reduce(b, p);
        if (ap.degree() != degree(a) || bp.degree() != degree(b)) continue;
        modp::Poly g = modp::gcd(ap, bp);
        if (g.degree() == 0) return {Integer(1)};
        if (g.degree() > best_deg) continue;
        g = modp::scale(g, modp::reduce(lcg, p));
        if (g.degree() < best_deg) {
            best_deg = g.degree();
            acc.assign(g.c.begin(), g.c.end());
            for (std::size_t i = 0; i < g.c.size(); ++i) acc[i] = Integer(static_cast<unsigned long>(g.c[i]));
            modulus = Integer(static_cast<unsigned long>(p));
            last_candidate.clear();
        } else {
            // CRT combine acc (mod modulus) with g (mod p).
            Integer P(static_cast<unsigned long>(p));
            Integer inv_m;
            mpz_invert(inv_m.get_mpz_t(), modulus.get_mpz_t(), P.get_mpz_t());
            for (std::size_t i = 0; i < acc.size(); ++i) {
                Integer diff = Integer(static_cast<unsigned long>(g.c[i])) - acc[i];
                Integer k;
                mpz_mul(k.get_mpz_t(), diff.get_mpz_t(), inv_m.get_mpz_t());
                mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), P.get_mpz_t());
                acc[i] += k * modulus;
            }
            modulus *= P;
        }
        ZPoly cand(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) cand[i] = symmetric(acc[i], modulus);
        cand = primitive(cand);
        if (cand == last_candidate) {
            ZPoly q;
            if (divide(a, cand, q) && divide(b, cand, q)) return cand;
        }
        last_candidate = cand;
    }
}

ZPoly squarefree_part(const ZPoly& f0) {
    ZPoly f = primitive(f0);
    if (f.empty()) throw DomainError("squarefree_part of the zero polynomial");
    if (degree(f) <= 0) return {Integer(1)};
    ZPoly g = gcd(f, derivative(f));
    ZPoly q;
    divide(f, g, q);
    return primitive(q);
}

namespace {

using modp::Poly;

// Polynomial with coefficients reduced into [0, m).
ZPoly mod_coeffs(const ZPoly& f, const Integer& m) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    trim(r);
    return r;
}

ZPoly lift_poly(const Poly& f) {
    ZPoly r;
    for (u64 c : f.c) r.push_back(Integer(static_cast<unsigned long>(c)));
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// Lift f = g*h (mod p) to mod p^k, h monic, lc(g) = lc(f) mod p^k.
void hensel_pair(const ZPoly& f, Poly g0, Poly h0, u64 p, int k, ZPoly& g, ZPoly& h) {
    Poly s, t;
    Poly one = modp::xgcd(g0, h0, s, t);
    if (one.degree() != 0) throw DomainError("Hensel lifting: factors not coprime mod p");
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    g = lift_poly(g0);
    h = lift_poly(h0);
    // Force the exact leading coefficient of g.
    g.back() = f.back();
    g = mod_coeffs(g, pk);
    Integer m(static_cast<unsigned long>(p));
    for (int j = 1; j < k; ++j) {
        ZPoly e = mod_coeffs(sub(f, mul(g, h)), pk);
        for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        Poly ep = modp::Poly::from_integers(e, p);
        Poly se = s * ep;
        Poly q, sigma;
        modp::divmod(se, h0, q, sigma);
        Poly dg = t * ep + q * g0;
        ZPoly dgz = lift_poly(dg), dhz = lift_poly(sigma);
        for (auto& c : dgz) c *= m;
        for (auto& c : dhz) c *= m;
        ZPoly ng(std::max(g.size(), dgz.size())), nh(std::max(h.size(), dhz.size()));
        for (std::size_t i = 0; i < g.size(); ++i) ng[i] += g[i];
        for (std::size_t i = 0; i < dgz.size(); ++i) ng[i] += dgz[i];
        for (std::size_t i = 0; i < h.size(); ++i) nh[i] += h[i];
        for (std::size_t i = 0; i < dhz.size(); ++i) nh[i] += dhz[i];
        g = mod_coeffs(ng, pk);
        h = mod_coeffs(nh, pk);
        m *= static_cast<unsigned long>(p);
    }
}

Poly product(const std::vector<Poly>& fs, std::size_t lo, std::size_t hi, u64 p) {
    Poly r(p, {1});
    for (std::size_t i = lo; i < hi; ++i) r = r * fs[i];
    return r;
}

// f ≡ lc(f) * prod(fs) mod p; returns the monic lifts mod p^k.
void multi_lift(const ZPoly& f, const std::vector<Poly>& fs, std::size_t lo, std::size_t hi, u64 p, int k,
                const Integer& pk, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        Integer li;
        mpz_invert(li.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
        ZPoly m = f;
        for (auto& c : m) c *= li;
        out[lo] = mod_coeffs(m, pk);
        return;
    }
    std::size_t mid = (lo + hi) / 2;
    Poly g0 = modp::scale(product(fs, lo, mid, p), modp::reduce(f.back(), p));
    Poly h0 = product(fs, mid, hi, p);
    ZPoly g, h;
    hensel_pair(f, g0, h0, p, k, g, h);
    multi_lift(g, fs, lo, mid, p, k, pk, out);
    multi_lift(h, fs, mid, hi, p, k, pk, out);
}

bool next_subset(std::vector<int>& idx, int n) {
    int s = static_cast<int>(idx.size());
    for (int i = s - 1; i >= 0; --i) {
        if (idx[i] < n - s + i) {
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& f0) {
    ZPoly f = primitive(f0);
    const int n = degree(f);
    if (n <= 1) return n == 1 ? std::vector<ZPoly>{f} : std::vector<ZPoly>{};
    // x-factor shortcut keeps the modular step clean.
    if (sgn(f[0]) == 0) {
        ZPoly rest(f.begin() + 1, f.end());
        auto out = factor_squarefree(rest);
        out.push_back({Integer(0), Integer(1)});
        std::sort(out.begin(), out.end(), zpoly_less);
        return out;
    }

    // Choose the prime with the fewest modular factors among a few candidates.
    u64 best_p = 0;
    std::size_t best_count = 0;
    u64 p = 1000;
    int tried = 0;
    while (tried < 8) {
        p = modp::next_prime(p + 1);
        if (modp::reduce(f.back(), p) == 0) continue;
        Poly fp = reduce(f, p);
        if (!modp::is_squarefree(fp)) continue;
        ++tried;
        std::size_t cnt = modp::factor_degrees(fp).size();
        if (best_p == 0 || cnt < best_count) {
            best_p = p;
            best_count = cnt;
        }
        if (cnt == 1) return {f};
    }
    p = best_p;
    std::vector<Poly> modf = modp::factor_squarefree(reduce(f, p).monic());

    // Coefficient bound for factors times lc.
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    Integer bound = norm * abs(f.back());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    bound *= 2;
    int k = 1;
    Integer pk(static_cast<unsigned long>(p));
    while (pk <= bound) {
        pk *= static_cast<unsigned long>(p);
        ++k;
    }
    std::vector<ZPoly> lifted(modf.size());
    multi_lift(f, modf, 0, modf.size(), p, k, pk, lifted);

    std::vector<ZPoly> result;
    std::vector<int> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), 0);
    ZPoly cur = f;
    for (int s = 1; 2 * s <= static_cast<int>(alive.size()); ++s) {
        bool found = true;
        while (found && 2 * s <= static_cast<int>(alive.size())) {
            found = false;
            std::vector<int> idx(s);
            std::iota(idx.begin(), idx.end(), 0);
            do {
                ZPoly g{cur.back()};
                for (int i : idx) g = mod_coeffs(mul(g, lifted[alive[i]]), pk);
                for (auto& c : g) c = symmetric(c, pk);
                g = primitive(g);
                ZPoly q;
                if (divide(cur, g, q)) {
                    result.push_back(g);
                    cur = primitive(q);
                    std::vector<int> rest;
                    for (int i = 0, j = 0; i < static_cast<int>(alive.size()); ++i) {
                        if (j < s && idx[j] == i) {
                            ++j;
                            continue;
                        }
                        rest.push_back(alive[i]);
                    }
                    alive = rest;
                    found = true;
                    break;
                }
            } while (next_subset(idx, static_cast<int>(alive.size())));
        }
    }
    if (degree(cur) > 0) result.push_back(primitive(cur));
    std::sort(result.begin(), result.end(), zpoly_less);
    return result;
}

std::vector<Factor> factor(const ZPoly& f0) {
    ZPoly f = primitive(f0);
    if (f.empty()) throw DomainError("factor of the zero polynomial");
    std::vector<Factor> out;
    if (degree(f) == 0) return out;
    // Yun's squarefree decomposition over Q.
    UniPoly F = to_unipoly(f);
    UniPoly Fd = derivative(F);
    UniPoly b = gcd(F, Fd);
    UniPoly c = F / b;
    UniPoly d = Fd / b - derivative(c);
    int i = 1;
    while (c.degree() > 0) {
        UniPoly a = gcd(c, d);
        if (a.degree() > 0)
            for (auto& g : factor_squarefree(from_unipoly(a))) out.push_back({g, i});
        c = c / a;
        d = d / a - derivative(c);
        ++i;
    }
    std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
        if (x.poly != y.poly) return zpoly_less(x.poly, y.poly);
        return x.multiplicity < y.multiplicity;
    });
    return out;
}

}  // namespace godeaux::zpoly
