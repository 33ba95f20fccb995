#pragma once
#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "polynomial.hpp"

namespace cremona {

/* ------------------------------------------------------------------ *
 *  Free-module machinery.
 *
 *  Elements of R^k are sparse vectors of (monomial, component) terms.
 *  A single Buchberger engine serves ideals (rank 1), submodules of free
 *  modules (syzygy steps of resolutions), and cofactor tracking: a vector may
 *  carry "tag" components with index >= rank.  Tag terms are inert -- they are
 *  never reduced and never selected as leads -- so they transport the
 *  expression of each basis element in the original generators through the
 *  whole computation.  Reducing an S-vector whose payload cancels to zero
 *  leaves its syzygy sitting in the tag block.
 * ------------------------------------------------------------------ */

template <class K>
struct VTerm {
    Monomial m;
    int comp;
    K c;
};

template <class K>
struct Vec {
    std::vector<VTerm<K>> t;   // sorted descending under the active module order

    bool is_zero() const { return t.empty(); }
    const VTerm<K>& lead() const {
        require(!t.empty(), ErrKind::Internal, "lead of zero vector");
        return t.front();
    }
};

/* Module order: payload block (comp < rank) dominates the tag block; within a
 * block, ring order on monomials, then smaller component wins ties. */
struct ModOrder {
    Ordering ord;
    int rank = 1;

    template <class K>
    int cmp(const VTerm<K>& a, const VTerm<K>& b) const {
        bool pa = a.comp < rank, pb = b.comp < rank;
        if (pa != pb) return pa ? 1 : -1;
        if (int c = ord.cmp(a.m, b.m)) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }
    template <class K>
    bool less(const VTerm<K>& a, const VTerm<K>& b) const { return cmp(a, b) < 0; }
};

template <class K>
Vec<K> vec_normalize(std::vector<VTerm<K>> terms, const ModOrder& mo) {
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const VTerm<K>& a, const VTerm<K>& b) { return mo.less(b, a); });
    Vec<K> v;
    for (auto& t : terms) {
        if (t.c.is_zero()) continue;
        if (!v.t.empty() && v.t.back().m == t.m && v.t.back().comp == t.comp) {
            v.t.back().c += t.c;
            if (v.t.back().c.is_zero()) v.t.pop_back();
        } else v.t.push_back(t);
    }
    return v;
}

/* v - c * x^m * g, merged in order */
template <class K>
Vec<K> vec_axpy(const Vec<K>& v, const K& c, const Monomial& m, const Vec<K>& g,
                const ModOrder& mo) {
    Vec<K> r;
    r.t.reserve(v.t.size() + g.t.size());
    size_t i = 0, j = 0;
    while (i < v.t.size() || j < g.t.size()) {
        int which;
        if (i == v.t.size()) which = 1;
        else if (j == g.t.size()) which = 0;
        else {
            VTerm<K> gt{g.t[j].m * m, g.t[j].comp, K()};
            int cc = mo.cmp(v.t[i], gt);
            which = cc > 0 ? 0 : (cc < 0 ? 1 : 2);
        }
        if (which == 0) r.t.push_back(v.t[i++]);
        else if (which == 1) {
            K cc = -(c * g.t[j].c);
            if (!cc.is_zero()) r.t.push_back({g.t[j].m * m, g.t[j].comp, cc});
            ++j;
        } else {
            K cc = v.t[i].c - c * g.t[j].c;
            if (!cc.is_zero()) r.t.push_back({v.t[i].m, v.t[i].comp, cc});
            ++i; ++j;
        }
    }
    return r;
}

template <class K>
Vec<K> vec_scale(Vec<K> v, const K& c) {
    for (auto& t : v.t) t.c = t.c * c;
    return v;
}

template <class K>
Vec<K> vec_mul_term(Vec<K> v, const Monomial& m, const K& c) {
    for (auto& t : v.t) { t.m = t.m * m; t.c = t.c * c; }
    return v;
}

template <class K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b, const ModOrder& mo) {
    if (b.t.empty()) return a;
    if (a.t.empty()) return b;
    return vec_axpy(a, K::from_int(-1, a.t.front().c.characteristic()), Monomial(1), b, mo);
}

/* component-window extraction: components [lo, hi) shifted down to [0, hi-lo) */
template <class K>
Vec<K> vec_window(const Vec<K>& v, int lo, int hi, const ModOrder& mo_out) {
    std::vector<VTerm<K>> ts;
    for (auto& t : v.t)
        if (t.comp >= lo && t.comp < hi) ts.push_back({t.m, t.comp - lo, t.c});
    return vec_normalize(std::move(ts), mo_out);
}

template <class K>
Vec<K> vec_from_poly(const Poly<K>& p, int comp = 0) {
    Vec<K> v;
    v.t.reserve(p.terms().size());
    for (auto& t : p.terms()) v.t.push_back({t.m, comp, t.c});
    return v;   // poly canonical order == degrevlex desc == valid for any single comp? re-sorted by callers
}

template <class K>
Poly<K> vec_to_poly(const Vec<K>& v, int comp, int nvars) {
    typename Poly<K>::Terms ts;
    for (auto& t : v.t)
        if (t.comp == comp) {
            Monomial m = t.m;
            m.n = (int8_t)nvars;
            ts.push_back({m, t.c});
        }
    return Poly<K>(std::move(ts), nvars);
}

/* ------------------------------------------------------------------ *
 *  Buchberger with sugar selection.
 * ------------------------------------------------------------------ */

template <class K>
struct GBElem {
    Vec<K> v;
    int sugar = 0;
};

namespace detail {

/* full normal form of v against basis (payload terms only are reducible);
 * returns reduced vector and updated sugar */
template <class K>
std::pair<Vec<K>, int> reduce_full(Vec<K> work, int sugar, const std::vector<GBElem<K>>& basis,
                                   const ModOrder& mo) {
    Vec<K> out;
    while (!work.t.empty()) {
        const VTerm<K>& t = work.t.front();
        const GBElem<K>* red = nullptr;
        if (t.comp < mo.rank) {
            for (auto& g : basis) {
                const VTerm<K>& lt = g.v.lead();
                if (lt.comp == t.comp && lt.m.divides(t.m)) { red = &g; break; }
            }
        }
        if (!red) {
            out.t.push_back(t);
            work.t.erase(work.t.begin());
            continue;
        }
        const VTerm<K>& lt = red->v.lead();
        Monomial q = t.m / lt.m;
        K c = t.c / lt.c;
        work = vec_axpy(work, c, q, red->v, mo);
        sugar = std::max(sugar, q.deg() + red->sugar);
    }
    return {out, sugar};
}

template <class K>
void make_payload_monic(Vec<K>& v) {
    if (v.t.empty()) return;
    K inv = v.t.front().c.inv();
    if (inv.is_one()) return;
    for (auto& t : v.t) t.c = t.c * inv;
}

struct Pair {
    int sugar, deg;
    Monomial lcm;
    int i, j;
};

} // namespace detail

/* Options for a Groebner run.  `shifts` gives the degree of each free-module
 * basis vector (payload and tag components alike) so graded inputs get exact
 * sugar values; leave empty for ungraded input. */
struct GBOptions {
    ModOrder mo;
    std::vector<int> shifts;
    bool reduced = true;
};

template <class K>
int vec_sugar(const Vec<K>& v, const std::vector<int>& shifts) {
    int s = 0;
    for (auto& t : v.t) {
        int sh = t.comp < (int)shifts.size() ? shifts[t.comp] : 0;
        s = std::max(s, t.m.deg() + sh);
    }
    return s;
}

/* Buchberger.  Input vectors may carry tag components (index >= mo.rank);
 * output basis elements carry the transported tags.  Elements whose payload
 * reduces to zero are dropped (their tags are recoverable via syzygies()). */
template <class K>
std::vector<GBElem<K>> buchberger(const std::vector<Vec<K>>& input, const GBOptions& opt) {
    const ModOrder& mo = opt.mo;
    std::vector<GBElem<K>> basis;

    auto pair_less = [&](const detail::Pair& a, const detail::Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.deg != b.deg) return a.deg < b.deg;
        if (int c = mo.ord.cmp(a.lcm, b.lcm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::multiset<detail::Pair, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<int, int>> pending;

    auto add_pairs = [&](int j) {
        const VTerm<K>& ltj = basis[j].v.lead();
        for (int i = 0; i < j; ++i) {
            const VTerm<K>& lti = basis[i].v.lead();
            if (lti.comp != ltj.comp) continue;
            Monomial l = Monomial::lcm(lti.m, ltj.m);
            int sugar = std::max(basis[i].sugar + (l / lti.m).deg(),
                                 basis[j].sugar + (l / ltj.m).deg());
            queue.insert({sugar, l.deg(), l, i, j});
            pending.insert({i, j});
        }
    };

    for (auto& v0 : input) {
        if (v0.is_zero()) continue;
        Vec<K> v = vec_normalize(std::vector<VTerm<K>>(v0.t), mo);
        GBElem<K> e{v, vec_sugar(v, opt.shifts)};
        detail::make_payload_monic(e.v);
        basis.push_back(e);
        add_pairs((int)basis.size() - 1);
    }

    while (!queue.empty()) {
        detail::Pair pr = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pr.i, pr.j});

        const VTerm<K>& lti = basis[pr.i].v.lead();
        const VTerm<K>& ltj = basis[pr.j].v.lead();

        // product criterion (valid for rank-1 payloads only)
        if (mo.rank == 1 && lti.m.coprime(ltj.m)) continue;

        // chain criterion: some third lead divides the lcm and both side pairs
        // are already off the queue
        bool skip = false;
        for (int k = 0; k < (int)basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            const VTerm<K>& ltk = basis[k].v.lead();
            if (ltk.comp != lti.comp || !ltk.m.divides(pr.lcm)) continue;
            auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        Vec<K> s = vec_axpy(vec_mul_term(basis[pr.i].v, pr.lcm / lti.m, K::one(lti.c.characteristic())),
                            K::one(lti.c.characteristic()), pr.lcm / ltj.m, basis[pr.j].v, mo);
        auto [red, sugar] = detail::reduce_full(std::move(s), pr.sugar, basis, mo);

        bool payload_nonzero = !red.t.empty() && red.t.front().comp < mo.rank;
        if (!payload_nonzero) continue;
        detail::make_payload_monic(red);
        basis.push_back({red, sugar});
        add_pairs((int)basis.size() - 1);
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<GBElem<K>> kept;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const VTerm<K>&a = basis[i].v.lead();
            const VTerm<K>&b = basis[j].v.lead();
            if (a.comp != b.comp || !b.m.divides(a.m)) continue;
            if (b.m == a.m) redundant = j < i;   // exact tie: keep the earlier
            else redundant = true;
        }
        if (!redundant) kept.push_back(basis[i]);
    }

    if (opt.reduced) {
        // tail-reduce every element against the others
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<GBElem<K>> others;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            auto [red, sugar] = detail::reduce_full(kept[i].v, kept[i].sugar, others, mo);
            require(!red.t.empty() && red.t.front().comp < mo.rank, ErrKind::Internal,
                    "interreduction killed a basis element");
            detail::make_payload_monic(red);
            kept[i] = {red, sugar};
        }
    }

    std::sort(kept.begin(), kept.end(), [&](const GBElem<K>& a, const GBElem<K>& b) {
        return mo.less(a.v.lead(), b.v.lead());
    });
    return kept;
}

/* normal form of v against a computed basis */
template <class K>
Vec<K> nf_vec(const Vec<K>& v, const std::vector<GBElem<K>>& basis, const ModOrder& mo) {
    Vec<K> w = vec_normalize(std::vector<VTerm<K>>(v.t), mo);
    return detail::reduce_full(std::move(w), 0, basis, mo).first;
}

/* ------------------------------------------------------------------ *
 *  Ideal-level conveniences.
 * ------------------------------------------------------------------ */

template <class K>
std::vector<Poly<K>> groebner_basis(const std::vector<Poly<K>>& gens,
                                    const Ordering& ord = Ordering::degrevlex()) {
    int nv = 1;
    for (auto& g : gens) nv = std::max(nv, g.nvars());
    ModOrder mo{ord, 1};
    std::vector<Vec<K>> in;
    for (auto& g : gens)
        if (!g.is_zero()) in.push_back(vec_normalize(vec_from_poly(g).t, mo));
    GBOptions opt{mo, {}, true};
    auto basis = buchberger(in, opt);
    std::vector<Poly<K>> out;
    out.reserve(basis.size());
    for (auto& e : basis) out.push_back(vec_to_poly(e.v, 0, nv));
    return out;
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& gb,
                    const Ordering& ord = Ordering::degrevlex()) {
    ModOrder mo{ord, 1};
    std::vector<GBElem<K>> basis;
    for (auto& g : gb)
        if (!g.is_zero()) basis.push_back({vec_normalize(vec_from_poly(g).t, mo), 0});
    Vec<K> v = vec_normalize(vec_from_poly(f).t, mo);
    Vec<K> r = detail::reduce_full(std::move(v), 0, basis, mo).first;
    return vec_to_poly(r, 0, f.nvars());
}

/* normal form together with cofactors: f = sum q_i g_i + r */
template <class K>
std::pair<Poly<K>, std::vector<Poly<K>>> normal_form_with_cofactors(
    const Poly<K>& f, const std::vector<Poly<K>>& gb, const Ordering& ord = Ordering::degrevlex()) {
    int r = (int)gb.size();
    ModOrder mo{ord, 1};
    std::vector<GBElem<K>> basis;
    for (int i = 0; i < r; ++i) {
        std::vector<VTerm<K>> ts = vec_from_poly(gb[i]).t;
        ts.push_back({Monomial(gb[i].nvars()), 1 + i, K::one(gb[i].characteristic())});
        basis.push_back({vec_normalize(std::move(ts), mo), 0});
    }
    Vec<K> v = vec_normalize(vec_from_poly(f).t, mo);
    Vec<K> red = detail::reduce_full(std::move(v), 0, basis, mo).first;
    Poly<K> rem = vec_to_poly(red, 0, f.nvars());
    std::vector<Poly<K>> cof;
    for (int i = 0; i < r; ++i) cof.push_back(-vec_to_poly(red, 1 + i, f.nvars()));
    return {rem, cof};
}

/* ------------------------------------------------------------------ *
 *  Syzygies.
 *
 *  Given columns v_1..v_r of a free module R^rank (rank >= 1), returns
 *  generators of { (a_1..a_r) : sum a_i v_i = 0 } as vectors in R^r.
 *  Implementation: tagged Buchberger run, then reduction of every
 *  same-component S-pair of the finished basis plus re-reduction of the
 *  original generators; the tags of those zero reductions generate the
 *  syzygy module.
 * ------------------------------------------------------------------ */

template <class K>
std::vector<Vec<K>> syzygies_mod(const std::vector<Vec<K>>& cols, int rank,
                                 const Ordering& ord = Ordering::degrevlex(),
                                 const std::vector<int>& shifts = {}) {
    int r = (int)cols.size();
    long long chi = 0;
    bool have_chi = false;
    for (auto& c : cols)
        if (!c.is_zero()) { chi = c.t.front().c.characteristic(); have_chi = true; }
    require(have_chi || r == 0, ErrKind::Internal, "syzygies of all-zero columns");

    ModOrder mo{ord, rank};
    std::vector<Vec<K>> tagged;
    for (int i = 0; i < r; ++i) {
        std::vector<VTerm<K>> ts(cols[i].t);
        ts.push_back({Monomial(1), rank + i, K::one(chi)});
        tagged.push_back(vec_normalize(std::move(ts), mo));
    }
    GBOptions opt{mo, shifts, true};
    auto basis = buchberger(tagged, opt);

    ModOrder mo_out{ord, r};
    std::vector<Vec<K>> syz;
    auto harvest = [&](const Vec<K>& reduced) {
        require(reduced.t.empty() || reduced.t.front().comp >= rank, ErrKind::Internal,
                "syzygy candidate did not reduce to zero payload");
        Vec<K> s = vec_window(reduced, rank, rank + r, mo_out);
        if (!s.is_zero()) syz.push_back(s);
    };

    // original generators re-expressed over the basis
    for (auto& g : tagged) harvest(detail::reduce_full(Vec<K>(g), 0, basis, mo).first);

    // all S-pairs of the finished basis
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            const VTerm<K>& a = basis[i].v.lead();
            const VTerm<K>& b = basis[j].v.lead();
            if (a.comp != b.comp) continue;
            Monomial l = Monomial::lcm(a.m, b.m);
            Vec<K> s = vec_axpy(vec_mul_term(basis[i].v, l / a.m, K::one(chi)),
                                K::one(chi), l / b.m, basis[j].v, mo);
            harvest(detail::reduce_full(std::move(s), 0, basis, mo).first);
        }

    return syz;
}

/* syzygies of a list of polynomials */
template <class K>
std::vector<Vec<K>> syzygies(const std::vector<Poly<K>>& gens,
                             const Ordering& ord = Ordering::degrevlex()) {
    ModOrder mo{ord, 1};
    std::vector<Vec<K>> cols;
    for (auto& g : gens) cols.push_back(vec_normalize(vec_from_poly(g).t, mo));
    return syzygies_mod(cols, 1, ord);
}

} // namespace cremona
