#pragma once

#include <array>
#include <string>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/gcd.hpp"
#include "cremona/ideal_ops.hpp"

namespace cremona {

/* three-way comparison of field elements, for canonical point ordering */
inline int cmp_field(const Fp& a, const Fp& b) {
    return a.value() < b.value() ? -1 : a.value() > b.value() ? 1 : 0;
}
inline int cmp_field(const Rat& a, const Rat& b) {
    return cmp(a.value(), b.value()) < 0 ? -1 : cmp(a.value(), b.value()) > 0 ? 1 : 0;
}

/* Point of P^2, stored with the first nonzero coordinate scaled to 1. */
template <class K>
struct ProjPoint {
    std::array<K, 3> c;

    ProjPoint(K a, K b, K d) : c{std::move(a), std::move(b), std::move(d)} {
        int lead = -1;
        for (int i = 0; i < 3 && lead < 0; ++i)
            if (!c[i].is_zero()) lead = i;
        require(lead >= 0, ErrKind::InvalidPoint, "(0:0:0) is not a projective point");
        K inv = c[lead].inv();
        for (int i = 0; i < 3; ++i) c[i] = c[i] * inv;
    }

    static ProjPoint of_ints(long long a, long long b, long long d, long long chi) {
        return ProjPoint(K::from_int(a, chi), K::from_int(b, chi), K::from_int(d, chi));
    }

    bool operator==(const ProjPoint& o) const {
        for (int i = 0; i < 3; ++i)
            if (!(c[i] - o.c[i]).is_zero()) return false;
        return true;
    }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

    bool operator<(const ProjPoint& o) const {
        for (int i = 0; i < 3; ++i) {
            int s = cmp_field(c[i], o.c[i]);
            if (s) return s < 0;
        }
        return false;
    }

    std::string str() const {
        auto one_coord = [](const K& v) {
            Poly<K> p = Poly<K>::constant(v, 1);
            return p.str();
        };
        return "(" + one_coord(c[0]) + " : " + one_coord(c[1]) + " : " + one_coord(c[2]) + ")";
    }
};

template <class K>
K eval_poly(const Poly<K>& f, const std::array<K, 3>& at, long long chi) {
    K acc = K::from_int(0, chi);
    for (const auto& t : f.terms()) {
        K v = t.c;
        for (int i = 0; i < 3; ++i)
            for (int e = 0; e < t.m.e[i]; ++e) v = v * at[i];
        acc = acc + v;
    }
    return acc;
}

/* Order of vanishing of a form at a point: translate the point to the
 * origin of the affine chart of its leading coordinate and read off the
 * minimal total degree. */
template <class K>
int order_at_point(const Poly<K>& f, const ProjPoint<K>& p, long long chi) {
    if (f.is_zero()) return -1;
    int lead = 0;
    while (p.c[lead].is_zero()) ++lead;
    std::vector<Poly<K>> images;
    for (int i = 0; i < 3; ++i) {
        if (i == lead) images.push_back(Poly<K>::constant(K::one(chi), 3));
        else images.push_back(Poly<K>::var(i, 3, chi) + Poly<K>::constant(p.c[i], 3));
    }
    return f.substitute(images).order_at_origin();
}

/* extract a polynomial supported on powers of one variable */
template <class K>
UPoly<K> poly_univariate(const Poly<K>& f, int var, long long chi) {
    UPoly<K> out;
    for (const auto& t : f.terms()) {
        require(t.m.deg() == t.m.e[var], ErrKind::Internal, "polynomial is not univariate");
        if ((int)out.size() <= t.m.e[var]) out.resize(t.m.e[var] + 1, K::from_int(0, chi));
        out[t.m.e[var]] = t.c;
    }
    return out;
}

/* Roots (a : b) of a homogeneous binary form in x, y.  second = false when
 * some root is not rational over the field. */
template <class K>
std::pair<std::vector<std::pair<K, K>>, bool> binary_roots(const Poly<K>& form, long long chi) {
    BinarySplit<K> sp = split_binary_form(form);
    std::vector<std::pair<K, K>> out;
    if (sp.xpow > 0) out.push_back({K::from_int(0, chi), K::one(chi)});  // x = 0
    if (sp.ypow > 0) out.push_back({K::one(chi), K::from_int(0, chi)});  // y = 0
    bool complete = true;
    if (udeg(sp.core) > 0) {
        auto [roots, split] = uroots(sp.core);
        complete = split;
        for (auto& [r, m] : roots) {
            (void)m;
            out.push_back({r, K::one(chi)});
        }
    }
    return {std::move(out), complete};
}

template <class K>
struct RationalPoints {
    std::vector<ProjPoint<K>> points;
    bool complete = true;  // false when V has points outside the ground field
};

/* The support of V(I) ⊂ P^2 for an ideal cutting out finitely many points.
 * Splits into the line z = 0 (binary-form gcd there) and the chart z = 1
 * (eliminate x, solve the y eliminant, then the x fibers). */
template <class K>
RationalPoints<K> rational_points(const Ideal<K>& ideal) {
    int nv = ideal.nvars();
    long long chi = ideal.characteristic();
    require(nv == 3, ErrKind::OutOfRange, "points live in P^2");
    require(!ideal.is_zero_ideal(), ErrKind::InvalidPoint, "the zero ideal is not zero dimensional");
    require(ideal.krull_dim() <= 1, ErrKind::InvalidPoint, "ideal does not cut out finitely many points");

    RationalPoints<K> res;
    K one = K::one(chi), zero = K::from_int(0, chi);

    // points on z = 0
    {
        std::vector<Poly<K>> restricted;
        std::vector<Poly<K>> images{Poly<K>::var(0, 3, chi), Poly<K>::var(1, 3, chi),
                                    Poly<K>::zero(3)};
        for (const auto& g : ideal.gens()) {
            Poly<K> r = g.substitute(images);
            if (!r.is_zero()) restricted.push_back(r);
        }
        require(!restricted.empty(), ErrKind::Internal, "the line z = 0 lies in V");
        Poly<K> g = restricted[0];
        for (size_t i = 1; i < restricted.size(); ++i) g = binary_form_gcd(g, restricted[i]);
        if (g.deg() > 0) {
            auto [roots, complete] = binary_roots(g, chi);
            if (!complete) res.complete = false;
            for (auto& [a, b] : roots) res.points.push_back(ProjPoint<K>(a, b, zero));
        }
    }

    // points with z != 0
    {
        std::vector<Poly<K>> affine;
        std::vector<Poly<K>> images{Poly<K>::var(0, 3, chi), Poly<K>::var(1, 3, chi),
                                    Poly<K>::constant(one, 3)};
        for (const auto& g : ideal.gens()) {
            Poly<K> r = g.substitute(images);
            require(!r.is_zero(), ErrKind::Internal, "generator vanished after z = 1");
            affine.push_back(r);
        }
        Ideal<K> j(affine, 3, chi);
        Ideal<K> elim = eliminate(j, {0});
        require(!elim.is_zero_ideal(), ErrKind::Internal, "x projection is not finite");
        require(elim.gb().size() == 1, ErrKind::Internal, "univariate elimination ideal not principal");
        UPoly<K> ely = poly_univariate(elim.gb()[0], 1, chi);
        if (udeg(ely) > 0) {
            auto [yroots, ysplit] = uroots(ely);
            if (!ysplit) res.complete = false;
            for (auto& [y0, ym] : yroots) {
                (void)ym;
                std::vector<Poly<K>> sub{Poly<K>::var(0, 3, chi), Poly<K>::constant(y0, 3),
                                         Poly<K>::constant(one, 3)};
                UPoly<K> gx;
                bool any = false;
                for (const auto& g : affine) {
                    Poly<K> h = g.substitute(sub);
                    if (h.is_zero()) continue;
                    UPoly<K> hu = poly_univariate(h, 0, chi);
                    gx = any ? ugcd(gx, hu, chi) : umonic(hu);
                    any = true;
                }
                require(any, ErrKind::Internal, "fiber over eliminant root is a line");
                require(udeg(gx) > 0, ErrKind::Internal, "eliminant root with empty fiber");
                auto [xroots, xsplit] = uroots(gx);
                if (!xsplit) res.complete = false;
                for (auto& [x0, xm] : xroots) {
                    (void)xm;
                    res.points.push_back(ProjPoint<K>(x0, y0, one));
                }
            }
        }
    }

    std::sort(res.points.begin(), res.points.end());
    return res;
}

}  // namespace cremona
