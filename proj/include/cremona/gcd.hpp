#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/field.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

/* Univariate polynomials as coefficient vectors, index = degree.
 * The zero polynomial is the empty vector. */
template <class K>
using UPoly = std::vector<K>;

template <class K>
void utrim(UPoly<K>& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

template <class K>
int udeg(const UPoly<K>& f) {
    return (int)f.size() - 1;  // -1 for zero
}

template <class K>
UPoly<K> umul(const UPoly<K>& a, const UPoly<K>& b, long long chi) {
    if (a.empty() || b.empty()) return {};
    UPoly<K> out(a.size() + b.size() - 1, K::from_int(0, chi));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    utrim(out);
    return out;
}

template <class K>
UPoly<K> usub(UPoly<K> a, const UPoly<K>& b, long long chi) {
    if (a.size() < b.size()) a.resize(b.size(), K::from_int(0, chi));
    for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
    utrim(a);
    return a;
}

/* Division with remainder; divisor must be nonzero. */
template <class K>
std::pair<UPoly<K>, UPoly<K>> udivmod(UPoly<K> a, const UPoly<K>& b, long long chi) {
    require(!b.empty(), ErrKind::DivisionByZero, "univariate division by zero");
    if (a.size() < b.size()) return {{}, std::move(a)};
    K lead_inv = b.back().inv();
    UPoly<K> q(a.size() - b.size() + 1, K::from_int(0, chi));
    for (int i = (int)a.size() - 1; i >= (int)b.size() - 1; --i) {
        if (a[i].is_zero()) continue;
        K c = a[i] * lead_inv;
        q[i - (int)b.size() + 1] = c;
        for (size_t j = 0; j < b.size(); ++j)
            a[i - b.size() + 1 + j] = a[i - b.size() + 1 + j] - c * b[j];
    }
    utrim(a);
    utrim(q);
    return {std::move(q), std::move(a)};
}

template <class K>
UPoly<K> umonic(UPoly<K> f) {
    if (f.empty()) return f;
    K inv = f.back().inv();
    for (auto& c : f) c = c * inv;
    return f;
}

template <class K>
UPoly<K> ugcd(UPoly<K> a, UPoly<K> b, long long chi) {
    while (!b.empty()) {
        auto [q, r] = udivmod(std::move(a), b, chi);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(std::move(a));
}

template <class K>
K ueval(const UPoly<K>& f, const K& x, long long chi) {
    K acc = K::from_int(0, chi);
    for (int i = (int)f.size() - 1; i >= 0; --i) acc = acc * x + f[i];
    return acc;
}

template <class K>
UPoly<K> uderiv(const UPoly<K>& f, long long chi) {
    if (f.size() <= 1) return {};
    UPoly<K> out(f.size() - 1, K::from_int(0, chi));
    for (size_t i = 1; i < f.size(); ++i)
        out[i - 1] = f[i] * K::from_int((long long)i, chi);
    utrim(out);
    return out;
}

/* a^e mod m */
template <class K>
UPoly<K> upow_mod(UPoly<K> a, unsigned long long e, const UPoly<K>& m, long long chi) {
    UPoly<K> r{K::from_int(1, chi)};
    a = udivmod(std::move(a), m, chi).second;
    while (e) {
        if (e & 1) r = udivmod(umul(r, a, chi), m, chi).second;
        a = udivmod(umul(a, a, chi), m, chi).second;
        e >>= 1;
    }
    return r;
}

namespace detail {

/* Equal-degree splitting of a product of distinct monic linear factors
 * over F_p, p odd: gcd(f, (x+a)^((p-1)/2) - 1) splits off roots r with
 * r+a a nonzero square. */
inline void cz_linear_roots(UPoly<Fp> f, long long p, std::mt19937_64& rng,
                            std::vector<Fp>& out) {
    utrim(f);
    if (udeg(f) <= 0) return;
    if (udeg(f) == 1) {
        out.push_back(-(f[0] * f[1].inv()));
        return;
    }
    std::uniform_int_distribution<long long> dist(0, p - 1);
    for (int attempt = 0; attempt < 200; ++attempt) {
        UPoly<Fp> shift{Fp(dist(rng), p), Fp(1, p)};
        UPoly<Fp> h = upow_mod(shift, (unsigned long long)((p - 1) / 2), f, p);
        if (!h.empty()) h[0] = h[0] - Fp(1, p);
        utrim(h);
        UPoly<Fp> g = ugcd(f, h, p);
        if (udeg(g) > 0 && udeg(g) < udeg(f)) {
            cz_linear_roots(g, p, rng, out);
            cz_linear_roots(udivmod(std::move(f), g, p).first, p, rng, out);
            return;
        }
    }
    fail(ErrKind::Internal, "equal-degree splitting did not converge");
}

}  // namespace detail

/* All roots of f in F_p, with multiplicities.  second = true when f splits
 * completely into linear factors over F_p. */
inline std::pair<std::vector<std::pair<Fp, int>>, bool> uroots(const UPoly<Fp>& f0,
                                                               unsigned long long seed = 12347) {
    UPoly<Fp> f = f0;
    utrim(f);
    require(!f.empty(), ErrKind::DivisionByZero, "roots of the zero polynomial");
    long long p = f.back().characteristic();
    std::vector<Fp> roots;
    if (p < 4096) {
        for (long long a = 0; a < p; ++a)
            if (ueval(f, Fp(a, p), p).is_zero()) roots.push_back(Fp(a, p));
    } else {
        // x^p - x mod f isolates the distinct linear factors
        UPoly<Fp> x{Fp(0, p), Fp(1, p)};
        UPoly<Fp> xp = upow_mod(x, (unsigned long long)p, f, p);
        UPoly<Fp> lin = ugcd(f, usub(xp, x, p), p);
        std::mt19937_64 rng(seed);
        detail::cz_linear_roots(lin, p, rng, roots);
    }
    std::sort(roots.begin(), roots.end(),
              [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
    std::vector<std::pair<Fp, int>> out;
    UPoly<Fp> rest = umonic(f);
    for (const Fp& r : roots) {
        UPoly<Fp> lin{-r, Fp(1, p)};
        int mult = 0;
        for (;;) {
            auto [q, rem] = udivmod(rest, lin, p);
            if (!rem.empty()) break;
            rest = std::move(q);
            ++mult;
        }
        out.push_back({r, mult});
    }
    return {std::move(out), udeg(rest) == 0};
}

/* Rational roots via the rational root theorem on the scaled integer
 * polynomial.  Coefficients in this codebase come from small inputs, so
 * the divisor scans stay cheap. */
inline std::pair<std::vector<std::pair<Rat, int>>, bool> uroots(const UPoly<Rat>& f0,
                                                                unsigned long long = 0) {
    UPoly<Rat> f = f0;
    utrim(f);
    require(!f.empty(), ErrKind::DivisionByZero, "roots of the zero polynomial");

    mpz_class den_lcm = 1;
    for (const Rat& c : f) {
        mpz_class d = c.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<mpz_class> zc;
    for (const Rat& c : f) zc.push_back(c.num() * (den_lcm / c.den()));
    mpz_class content = 0;
    for (const auto& c : zc) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content != 0)
        for (auto& c : zc) c /= content;

    int low = 0;
    while (low < (int)zc.size() && zc[low] == 0) ++low;
    std::vector<Rat> roots;
    if (low > 0) roots.push_back(Rat::from_int(0, 0));

    mpz_class a0 = zc[low], an = zc.back();
    auto divisors = [](mpz_class n) {
        n = abs(n);
        std::vector<mpz_class> ds;
        for (mpz_class i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                ds.push_back(i);
                if (i * i != n) ds.push_back(n / i);
            }
        return ds;
    };
    require(mpz_sizeinbase(a0.get_mpz_t(), 2) <= 64 && mpz_sizeinbase(an.get_mpz_t(), 2) <= 64,
            ErrKind::OutOfRange, "coefficients too large for rational root scan");
    for (const mpz_class& pd : divisors(a0))
        for (const mpz_class& qd : divisors(an)) {
            mpq_class cand(pd, qd);
            cand.canonicalize();
            for (int sign = 0; sign < 2; ++sign) {
                Rat r(sign ? mpq_class(-cand) : cand);
                if (ueval(f, r, 0).is_zero() &&
                    std::find_if(roots.begin(), roots.end(),
                                 [&](const Rat& x) { return x == r; }) == roots.end())
                    roots.push_back(r);
            }
        }

    std::sort(roots.begin(), roots.end(), [](const Rat& a, const Rat& b) {
        return mpq_class(a.value()) < mpq_class(b.value());
    });
    std::vector<std::pair<Rat, int>> out;
    UPoly<Rat> rest = umonic(f);
    for (const Rat& r : roots) {
        UPoly<Rat> lin{-r, Rat::from_int(1, 0)};
        int mult = 0;
        for (;;) {
            auto [q, rem] = udivmod(rest, lin, (long long)0);
            if (!rem.empty()) break;
            rest = std::move(q);
            ++mult;
        }
        out.push_back({r, mult});
    }
    return {std::move(out), udeg(rest) == 0};
}

/* ---- binary forms ------------------------------------------------- */

/* A homogeneous polynomial in x, y alone (any nvars), as x-coefficient
 * vector after factoring out the pure powers. */
template <class K>
struct BinarySplit {
    int xpow = 0, ypow = 0;
    UPoly<K> core;  // core[i] = coefficient of x^i y^(deg-i), core has nonzero ends
    int deg = 0;    // degree of the core form
};

template <class K>
BinarySplit<K> split_binary_form(const Poly<K>& f) {
    require(!f.is_zero(), ErrKind::DivisionByZero, "zero binary form");
    require(f.is_homogeneous(), ErrKind::NotHomogeneous, "binary form must be homogeneous");
    int xmin = 1 << 14, ymin = 1 << 14, d = f.deg();
    for (const auto& t : f.terms()) {
        require(t.m.e[0] + t.m.e[1] == t.m.deg(), ErrKind::OutOfRange,
                "form involves variables beyond x, y");
        xmin = std::min(xmin, (int)t.m.e[0]);
        ymin = std::min(ymin, (int)t.m.e[1]);
    }
    BinarySplit<K> out;
    out.xpow = xmin;
    out.ypow = ymin;
    out.deg = d - xmin - ymin;
    out.core.assign(out.deg + 1, K::from_int(0, f.characteristic()));
    for (const auto& t : f.terms()) out.core[t.m.e[0] - xmin] = t.c;
    return out;
}

template <class K>
Poly<K> binary_form_from_upoly(const UPoly<K>& core, int deg, int nvars, long long) {
    Poly<K> out = Poly<K>::zero(nvars);
    for (int i = 0; i < (int)core.size(); ++i) {
        if (core[i].is_zero()) continue;
        Monomial m(nvars);
        m.e[0] = (int16_t)i;
        m.e[1] = (int16_t)(deg - i);
        out = out + Poly<K>::monomial(m, core[i]);
    }
    return out;
}

/* gcd of two homogeneous forms in x, y: pure-power part plus the gcd of
 * the dehomogenized cores. */
template <class K>
Poly<K> binary_form_gcd(const Poly<K>& f, const Poly<K>& g) {
    long long chi = f.characteristic();
    BinarySplit<K> a = split_binary_form(f), b = split_binary_form(g);
    UPoly<K> core = ugcd(a.core, b.core, chi);
    int cd = udeg(core);
    Poly<K> out = binary_form_from_upoly(core, cd, f.nvars(), chi);
    Monomial m(f.nvars());
    m.e[0] = (int16_t)std::min(a.xpow, b.xpow);
    m.e[1] = (int16_t)std::min(a.ypow, b.ypow);
    return out.mul_term(m, K::from_int(1, chi));
}

}  // namespace cremona
