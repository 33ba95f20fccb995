#pragma once

#include <algorithm>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/monomial.hpp"

namespace cremona {

/* Polynomials in t with int64 coefficients, index = power of t. */
using ZPoly = std::vector<long long>;

inline void zp_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ZPoly zp_add(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    zp_trim(a);
    return a;
}

inline ZPoly zp_sub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    zp_trim(a);
    return a;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    zp_trim(out);
    return out;
}

/* multiply by t^k */
inline ZPoly zp_shift(ZPoly a, int k) {
    if (a.empty()) return a;
    a.insert(a.begin(), (size_t)k, 0);
    return a;
}

inline long long zp_eval1(const ZPoly& f) {
    long long s = 0;
    for (long long c : f) s += c;
    return s;
}

/* C(n, k) with the convention C(n, k) = 0 for n < k or n < 0 */
inline long long binomial(long long n, int k) {
    if (k < 0 || n < 0 || n < k) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace detail {

inline void minimalize_monomials(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.deg() < b.deg(); });
    std::vector<Monomial> out;
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& kept : out)
            if (kept.divides(m)) { redundant = true; break; }
        if (!redundant) out.push_back(m);
    }
    gens = std::move(out);
}

inline ZPoly monomial_numerator(std::vector<Monomial> gens) {
    minimalize_monomials(gens);
    if (gens.empty()) return {1};
    if (gens.front().deg() == 0) return {};

    bool coprime = true;
    for (size_t i = 0; i + 1 < gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].coprime(gens[j])) { coprime = false; break; }
    if (coprime) {
        ZPoly acc{1};
        for (const Monomial& m : gens) {
            ZPoly factor(m.deg() + 1, 0);
            factor[0] = 1;
            factor[m.deg()] = -1;
            acc = zp_mul(acc, factor);
        }
        return acc;
    }

    // split off the last (highest-degree) generator g:
    //   N(M' + g) = N(M') - t^deg(g) * N(M' : g)
    Monomial g = gens.back();
    gens.pop_back();
    std::vector<Monomial> colon;
    for (const Monomial& m : gens) colon.push_back(m / Monomial::gcd(m, g));
    return zp_sub(monomial_numerator(gens),
                  zp_shift(monomial_numerator(std::move(colon)), g.deg()));
}

}  // namespace detail

/* Hilbert series of R/M as numerator over (1-t)^nvars, M the monomial
 * ideal generated by `leads` (typically lead terms of a Groebner basis). */
struct HilbertSeries {
    ZPoly num;
    int nvars = 3;

    /* cancel (1-t) factors until the numerator no longer vanishes at 1;
     * returns the fully reduced numerator and the remaining denominator
     * exponent, which is the Krull dimension */
    std::pair<ZPoly, int> reduced() const {
        ZPoly n = num;
        zp_trim(n);
        if (n.empty()) return {{}, -1};  // the zero module
        int d = nvars;
        while (d > 0 && zp_eval1(n) == 0) {
            // divide by (1-t): quotient coefficients are prefix sums
            ZPoly q(n.size() - 1, 0);
            long long run = 0;
            for (size_t i = 0; i + 1 < n.size(); ++i) {
                run += n[i];
                q[i] = run;
            }
            zp_trim(q);
            n = std::move(q);
            --d;
        }
        require(!(d == 0 && zp_eval1(n) == 0) || n.empty(), ErrKind::Internal,
                "numerator divisible by (1-t)^nvars yet nonzero");
        return {std::move(n), d};
    }

    /* Krull dimension of R/M: nvars minus the vanishing order at t=1;
     * -1 for the zero module */
    int krull_dim() const { return reduced().second; }

    /* degree of R/M (length when the dimension is 0) */
    long long degree() const {
        auto [n, d] = reduced();
        (void)d;
        return n.empty() ? 0 : zp_eval1(n);
    }

    /* value of the Hilbert function at m */
    long long hf(int m) const {
        long long s = 0;
        for (size_t i = 0; i < num.size(); ++i)
            s += num[i] * binomial((long long)m - (long long)i + nvars - 1, nvars - 1);
        return s;
    }
};

inline HilbertSeries hilbert_series_of_leads(std::vector<Monomial> leads, int nvars) {
    HilbertSeries hs;
    hs.nvars = nvars;
    hs.num = detail::monomial_numerator(std::move(leads));
    return hs;
}

}  // namespace cremona
