#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/groebner.hpp"
#include "cremona/hilbert.hpp"
#include "cremona/ideal_ops.hpp"

namespace cremona {

/* beta[step][degree] = number of minimal generators of F_step in that degree */
struct BettiTable {
    std::map<int, std::map<int, int>> b;

    BettiTable() = default;
    BettiTable(std::initializer_list<std::pair<int, std::initializer_list<std::pair<int, int>>>> init) {
        for (auto& [s, row] : init)
            for (auto& [d, n] : row) b[s][d] = n;
    }

    bool operator==(const BettiTable& o) const { return b == o.b; }
    bool operator!=(const BettiTable& o) const { return !(b == o.b); }

    int total(int step) const {
        auto it = b.find(step);
        if (it == b.end()) return 0;
        int n = 0;
        for (auto& [d, c] : it->second) n += c;
        return n;
    }

    std::string str() const {
        std::string s;
        for (auto& [step, row] : b) {
            s += "F" + std::to_string(step) + " =";
            bool first = true;
            for (auto& [d, n] : row) {
                s += first ? " " : " + ";
                s += "R(" + std::to_string(-d) + ")";
                if (n != 1) s += "^" + std::to_string(n);
                first = false;
            }
            s += "\n";
        }
        return s;
    }
};

template <class K>
int column_degree(const Vec<K>& c, const std::vector<int>& shifts) {
    require(!c.is_zero(), ErrKind::Internal, "degree of a zero column");
    int d = -1;
    for (const auto& t : c.t) {
        require(t.comp >= 0 && t.comp < (int)shifts.size(), ErrKind::OutOfRange,
                "column component outside the free module");
        int dd = t.m.deg() + shifts[t.comp];
        require(d < 0 || dd == d, ErrKind::NotHomogeneous, "column not homogeneous");
        d = dd;
    }
    return d;
}

namespace detail {

/* slice layout of a shifted free module at total degree d */
template <class K>
struct SliceLayout {
    std::vector<int> offset;
    std::vector<std::map<Monomial, int, CanonLess>> index;
    std::vector<std::vector<Monomial>> mons;
    int width = 0;

    SliceLayout(int d, const std::vector<int>& shifts, int nv) {
        int rank = (int)shifts.size();
        offset.resize(rank);
        index.resize(rank);
        mons.resize(rank);
        for (int c = 0; c < rank; ++c) {
            offset[c] = width;
            mons[c] = monomials_of_degree(d - shifts[c], nv);
            for (size_t j = 0; j < mons[c].size(); ++j) index[c].emplace(mons[c][j], (int)j);
            width += (int)mons[c].size();
        }
    }

    std::vector<K> flatten(const Vec<K>& v, long long chi) const {
        std::vector<K> row(width, K::from_int(0, chi));
        for (const auto& t : v.t) {
            auto it = index[t.comp].find(t.m);
            require(it != index[t.comp].end(), ErrKind::Internal, "term outside the slice");
            row[offset[t.comp] + it->second] = t.c;
        }
        return row;
    }
};

/* Minimal generators among homogeneous columns of a shifted free module,
 * chosen degree by degree (graded Nakayama). */
template <class K>
std::vector<Vec<K>> min_generators_module(const std::vector<Vec<K>>& cols,
                                          const std::vector<int>& shifts, int nv, long long chi) {
    std::vector<std::pair<int, int>> order;  // (degree, index)
    for (size_t i = 0; i < cols.size(); ++i) {
        require(!cols[i].is_zero(), ErrKind::Internal, "zero generator column");
        order.push_back({column_degree(cols[i], shifts), (int)i});
    }
    std::sort(order.begin(), order.end());

    std::vector<Vec<K>> chosen;
    std::vector<int> chosen_deg;
    size_t pos = 0;
    while (pos < order.size()) {
        int d = order[pos].first;
        SliceLayout<K> layout(d, shifts, nv);
        IncrementalSpan<K> span(layout.width, chi);
        for (size_t g = 0; g < chosen.size(); ++g)
            for (const Monomial& m : monomials_of_degree(d - chosen_deg[g], nv))
                span.add(layout.flatten(vec_mul_term(chosen[g], m, K::one(chi)), chi));
        for (; pos < order.size() && order[pos].first == d; ++pos) {
            const Vec<K>& cand = cols[order[pos].second];
            if (span.add(layout.flatten(cand, chi))) {
                chosen.push_back(cand);
                chosen_deg.push_back(d);
            }
        }
    }
    return chosen;
}

}  // namespace detail

/* Minimal graded free resolution 0 <- M <- F_0 <- F_1 <- ... <- F_pd.
 * mats[s] is the matrix of F_{s+1} -> F_s, entry [i][j] in row i, column j;
 * shifts[s] lists the twists of F_s (F_s = ⊕_j R(-shifts[s][j])). */
template <class K>
struct FreeResolution {
    std::vector<std::vector<int>> shifts;
    std::vector<std::vector<std::vector<Poly<K>>>> mats;
    int nv = 3;
    long long chi = 0;

    int pd() const { return (int)shifts.size() - 1; }

    BettiTable betti() const {
        BettiTable t;
        for (size_t s = 0; s < shifts.size(); ++s)
            for (int d : shifts[s]) t.b[(int)s][d]++;
        return t;
    }

    /* Castelnuovo-Mumford regularity of the resolved module */
    int regularity() const {
        int r = -(1 << 28);
        for (size_t s = 0; s < shifts.size(); ++s)
            for (int d : shifts[s]) r = std::max(r, d - (int)s);
        return r;
    }

    /* numerator of the Hilbert series over (1-t)^nv, from the Betti table */
    ZPoly numerator() const {
        ZPoly n;
        for (size_t s = 0; s < shifts.size(); ++s)
            for (int d : shifts[s]) {
                if ((int)n.size() <= d) n.resize(d + 1, 0);
                n[d] += (s % 2 == 0) ? 1 : -1;
            }
        zp_trim(n);
        return n;
    }

    /* consecutive maps compose to zero */
    bool composition_is_zero() const {
        for (size_t s = 0; s + 1 < mats.size(); ++s) {
            const auto &a = mats[s], &b = mats[s + 1];
            if (a.empty() || b.empty()) continue;
            size_t rows = a.size(), mid = b.size(), cols = b[0].size();
            for (size_t i = 0; i < rows; ++i)
                for (size_t k = 0; k < cols; ++k) {
                    Poly<K> acc(nv);
                    for (size_t j = 0; j < mid; ++j) acc += a[i][j] * b[j][k];
                    if (!acc.is_zero()) return false;
                }
        }
        return true;
    }
};

/* Resolve F_0/im(cols), F_0 the free module with the given twists.  Every
 * stage keeps only a minimal generating set of the syzygy module before
 * taking syzygies again, so the result is minimal and the length is bounded
 * by the global dimension. */
template <class K>
FreeResolution<K> resolve_cokernel(const std::vector<Vec<K>>& cols, std::vector<int> f0_shifts,
                                   int nv, long long chi) {
    FreeResolution<K> res;
    res.nv = nv;
    res.chi = chi;
    res.shifts.push_back(f0_shifts);

    std::vector<Vec<K>> cur = detail::min_generators_module(cols, f0_shifts, nv, chi);
    std::vector<int> cur_shifts = f0_shifts;
    while (!cur.empty()) {
        require((int)res.shifts.size() <= nv, ErrKind::Internal,
                "resolution exceeded the global dimension bound");
        std::vector<int> next_shifts;
        for (const auto& c : cur) next_shifts.push_back(column_degree(c, cur_shifts));
        std::vector<std::vector<Poly<K>>> mat(cur_shifts.size(),
                                              std::vector<Poly<K>>(cur.size(), Poly<K>(nv)));
        for (size_t j = 0; j < cur.size(); ++j)
            for (size_t i = 0; i < cur_shifts.size(); ++i)
                mat[i][j] = vec_to_poly(cur[j], (int)i, nv);
        res.mats.push_back(std::move(mat));
        res.shifts.push_back(next_shifts);

        std::vector<Vec<K>> syz = syzygies_mod(cur, (int)cur_shifts.size(),
                                               Ordering::degrevlex(), cur_shifts);
        cur = detail::min_generators_module(syz, next_shifts, nv, chi);
        cur_shifts = std::move(next_shifts);
    }
    return res;
}

/* Minimal free resolution of R/I. */
template <class K>
FreeResolution<K> resolve_quotient(const Ideal<K>& ideal) {
    require(ideal.is_homogeneous(), ErrKind::NotHomogeneous,
            "resolution needs a homogeneous ideal");
    int nv = ideal.nvars();
    long long chi = ideal.characteristic();
    ModOrder mo{Ordering::degrevlex(), 1};
    std::vector<Vec<K>> cols;
    for (const auto& g : ideal.gens()) cols.push_back(vec_normalize(vec_from_poly(g).t, mo));
    return resolve_cokernel(cols, {0}, nv, chi);
}

}  // namespace cremona
