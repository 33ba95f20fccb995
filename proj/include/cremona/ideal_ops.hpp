#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/groebner.hpp"
#include "cremona/hilbert.hpp"
#include "cremona/linalg.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

/* All monomials of total degree d in nv variables, descending degrevlex. */
inline std::vector<Monomial> monomials_of_degree(int d, int nv) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial m(nv);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nv - 1) {
            m.e[pos] = (int16_t)rem;
            out.push_back(m);
            m.e[pos] = 0;
            return;
        }
        for (int e = rem; e >= 0; --e) {
            m.e[pos] = (int16_t)e;
            self(self, pos + 1, rem - e);
        }
        m.e[pos] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return CanonLess{}(b, a); });
    return out;
}

template <class K>
std::vector<K> poly_to_row(const Poly<K>& f, const std::map<Monomial, int, CanonLess>& index,
                           long long chi) {
    std::vector<K> row(index.size(), K::from_int(0, chi));
    for (const auto& t : f.terms()) {
        auto it = index.find(t.m);
        require(it != index.end(), ErrKind::Internal, "monomial outside the slice");
        row[it->second] = t.c;
    }
    return row;
}

template <class K>
Poly<K> row_to_poly(const std::vector<K>& row, const std::vector<Monomial>& mons, int nv) {
    typename Poly<K>::Terms ts;
    for (size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) ts.push_back({mons[j], row[j]});
    return Poly<K>(std::move(ts), nv);
}

/* Homogeneous ideal of the polynomial ring in nv variables.  Generators are
 * kept as given (zero generators dropped); the degrevlex Groebner basis is
 * computed once on demand.  The reduced basis is canonical, so two ideals are
 * equal exactly when their cached bases coincide. */
template <class K>
class Ideal {
public:
    Ideal() = default;
    Ideal(std::vector<Poly<K>> gens, int nvars, long long chi) : nv_(nvars), chi_(chi) {
        validate_field(FieldConfig{chi});
        if constexpr (std::is_same_v<K, Rat>)
            require(chi == 0, ErrKind::IncompatibleField, "rational ideal with prime characteristic");
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            require(g.characteristic() == chi_, ErrKind::IncompatibleField,
                    "generator characteristic mismatch");
            gens_.push_back(g.extended(nvars));
        }
    }

    static Ideal parse(const std::vector<std::string>& strs, int nvars, long long chi) {
        std::vector<Poly<K>> gens;
        for (const auto& s : strs) gens.push_back(parse_poly<K>(s, nvars, chi));
        return Ideal(std::move(gens), nvars, chi);
    }

    int nvars() const { return nv_; }
    long long characteristic() const { return chi_; }
    const std::vector<Poly<K>>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    bool is_homogeneous() const {
        for (const auto& g : gens_)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    const std::vector<Poly<K>>& gb() const {
        if (!gb_) gb_ = groebner_basis(gens_, Ordering::degrevlex());
        return *gb_;
    }

    std::vector<Monomial> lead_monomials() const {
        std::vector<Monomial> out;
        for (const auto& g : gb()) out.push_back(g.lead(Ordering::degrevlex()).m);
        return out;
    }

    Poly<K> normal_form(const Poly<K>& f) const {
        return cremona::normal_form(f.extended(nv_), gb(), Ordering::degrevlex());
    }

    bool contains(const Poly<K>& f) const { return normal_form(f).is_zero(); }

    bool contains_ideal(const Ideal& o) const {
        for (const auto& g : o.gens_)
            if (!contains(g)) return false;
        return true;
    }

    bool contains_one() const {
        for (const auto& g : gb())
            if (g.deg() == 0) return true;
        return false;
    }

    /* reduced Groebner bases are canonical, so compare them directly */
    bool equals(const Ideal& o) const {
        const auto &a = gb(), &b = o.gb();
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!(a[i] == b[i])) return false;
        return true;
    }

    HilbertSeries hilbert() const {
        require(is_homogeneous(), ErrKind::NotHomogeneous,
                "Hilbert series needs a homogeneous ideal");
        return hilbert_series_of_leads(lead_monomials(), nv_);
    }

    /* Krull dimension of R/I (affine cone); nvars for the zero ideal */
    int krull_dim() const { return hilbert().krull_dim(); }
    long long degree() const { return hilbert().degree(); }

    /* dim_k (R/I)_d */
    long long hf(int d) const { return hilbert().hf(d); }

    /* dim_k I_d */
    long long slice_dim(int d) const {
        return binomial(d + nv_ - 1, nv_ - 1) - hf(d);
    }

private:
    std::vector<Poly<K>> gens_;
    int nv_ = 3;
    long long chi_ = std::is_same_v<K, Fp> ? Fp::default_characteristic : 0;
    mutable std::optional<std::vector<Poly<K>>> gb_;
};

template <class K>
Ideal<K> irrelevant_ideal(int nv, long long chi) {
    std::vector<Poly<K>> gens;
    for (int i = 0; i < nv; ++i) gens.push_back(Poly<K>::var(i, nv, chi));
    return Ideal<K>(std::move(gens), nv, chi);
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
    std::vector<Poly<K>> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal<K>(std::move(gens), a.nvars(), a.characteristic());
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
    std::vector<Poly<K>> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal<K>(std::move(gens), a.nvars(), a.characteristic());
}

template <class K>
Ideal<K> ideal_power(const Ideal<K>& a, int k) {
    require(k >= 0, ErrKind::OutOfRange, "negative ideal power");
    if (k == 0)
        return Ideal<K>({Poly<K>::constant(K::one(a.characteristic()), a.nvars())}, a.nvars(),
                        a.characteristic());
    Ideal<K> acc = a;
    for (int i = 1; i < k; ++i) acc = ideal_product(acc, a);
    return acc;
}

/* Rename variables: perm[old] = new.  Active variable count is unchanged. */
template <class K>
Poly<K> permute_vars(const Poly<K>& f, const std::array<int, kMaxVars>& perm) {
    typename Poly<K>::Terms ts;
    for (const auto& t : f.terms()) {
        Monomial nm(f.nvars());
        for (int i = 0; i < f.nvars(); ++i) nm.e[perm[i]] = t.m.e[i];
        ts.push_back({nm, t.c});
    }
    return Poly<K>(std::move(ts), f.nvars());
}

/* I ∩ k[remaining variables]: move the doomed variables to the front block,
 * run a block order, keep the basis elements free of them. */
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<int>& kill) {
    if (kill.empty() || ideal.is_zero_ideal()) return ideal;
    int nv = ideal.nvars();
    std::array<char, kMaxVars> killed{};
    for (int v : kill) {
        require(v >= 0 && v < nv, ErrKind::OutOfRange, "eliminated variable out of range");
        require(!killed[v], ErrKind::OutOfRange, "variable listed twice");
        killed[v] = 1;
    }
    int k = (int)kill.size();
    std::array<int, kMaxVars> fwd{}, back{};
    int front = 0, rest = k;
    for (int i = 0; i < nv; ++i) {
        fwd[i] = killed[i] ? front++ : rest++;
        back[fwd[i]] = i;
    }

    std::vector<Poly<K>> mapped;
    for (const auto& g : ideal.gens()) mapped.push_back(permute_vars(g, fwd));
    std::vector<Poly<K>> gb = groebner_basis(mapped, Ordering::elim(k));

    std::vector<Poly<K>> out;
    for (const auto& g : gb) {
        bool clean = true;
        for (const auto& t : g.terms())
            for (int i = 0; i < k && clean; ++i)
                if (t.m.e[i]) clean = false;
        if (clean) out.push_back(permute_vars(g, back));
    }
    return Ideal<K>(std::move(out), nv, ideal.characteristic());
}

/* I ∩ J via syzygies of the two-row module
 *     [ 1  f_1 .. f_r  0   ..  0  ]
 *     [ 1  0   ..  0   g_1 .. g_s ]
 * whose syzygy first components run through I ∩ J. */
template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
    require(a.nvars() == b.nvars() && a.characteristic() == b.characteristic(),
            ErrKind::IncompatibleField, "intersection of ideals in different rings");
    int nv = a.nvars();
    long long chi = a.characteristic();
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal<K>({}, nv, chi);

    ModOrder mo{Ordering::degrevlex(), 2};
    std::vector<Vec<K>> cols;
    {
        std::vector<VTerm<K>> ts{{Monomial(nv), 0, K::one(chi)}, {Monomial(nv), 1, K::one(chi)}};
        cols.push_back(vec_normalize(std::move(ts), mo));
    }
    auto push_gen = [&](const Poly<K>& f, int comp) {
        std::vector<VTerm<K>> ts;
        for (const auto& t : f.terms()) ts.push_back({t.m, comp, t.c});
        cols.push_back(vec_normalize(std::move(ts), mo));
    };
    for (const auto& f : a.gens()) push_gen(f, 0);
    for (const auto& g : b.gens()) push_gen(g, 1);

    std::vector<Poly<K>> out;
    for (const auto& s : syzygies_mod(cols, 2)) {
        Poly<K> c = vec_to_poly(s, 0, nv);
        if (!c.is_zero()) out.push_back(std::move(c));
    }
    return Ideal<K>(std::move(out), nv, chi);
}

/* I : J via syzygies of the rank-s module whose column 0 stacks the
 * generators of J and whose other columns place each generator of I in a
 * single row: a syzygy's first component a satisfies a*g_i ∈ I for all i. */
template <class K>
Ideal<K> colon(const Ideal<K>& a, const Ideal<K>& b) {
    require(a.nvars() == b.nvars() && a.characteristic() == b.characteristic(),
            ErrKind::IncompatibleField, "colon of ideals in different rings");
    int nv = a.nvars();
    long long chi = a.characteristic();
    require(!b.is_zero_ideal(), ErrKind::DivisionByZero, "colon by the zero ideal");
    if (a.is_zero_ideal()) return a;

    int s = (int)b.gens().size();
    ModOrder mo{Ordering::degrevlex(), s};
    std::vector<Vec<K>> cols;
    {
        std::vector<VTerm<K>> ts;
        for (int i = 0; i < s; ++i)
            for (const auto& t : b.gens()[i].terms()) ts.push_back({t.m, i, t.c});
        cols.push_back(vec_normalize(std::move(ts), mo));
    }
    for (int i = 0; i < s; ++i)
        for (const auto& f : a.gens()) {
            std::vector<VTerm<K>> ts;
            for (const auto& t : f.terms()) ts.push_back({t.m, i, t.c});
            cols.push_back(vec_normalize(std::move(ts), mo));
        }

    std::vector<Poly<K>> out;
    for (const auto& v : syzygies_mod(cols, s)) {
        Poly<K> c = vec_to_poly(v, 0, nv);
        if (!c.is_zero()) out.push_back(std::move(c));
    }
    return Ideal<K>(std::move(out), nv, chi);
}

template <class K>
Ideal<K> colon(const Ideal<K>& a, const Poly<K>& g) {
    return colon(a, Ideal<K>({g}, a.nvars(), a.characteristic()));
}

/* I : J^∞ along the chain I ⊆ I:J ⊆ I:J² ⊆ …, which stabilizes at the
 * saturation.  Returns the saturation and the number of colon steps, i.e.
 * the least k with I : J^k saturated. */
template <class K>
std::pair<Ideal<K>, int> saturate(const Ideal<K>& a, const Ideal<K>& b, int cap = 64) {
    Ideal<K> prev = a;
    for (int k = 0; k <= cap; ++k) {
        Ideal<K> next = colon(prev, b);
        if (next.equals(prev)) return {std::move(prev), k};
        prev = std::move(next);
    }
    fail(ErrKind::DepthCapExceeded, "saturation did not stabilize");
}

/* saturation with respect to the irrelevant maximal ideal */
template <class K>
std::pair<Ideal<K>, int> saturate_irrelevant(const Ideal<K>& a, int cap = 64) {
    return saturate(a, irrelevant_ideal<K>(a.nvars(), a.characteristic()), cap);
}

/* Canonical basis of the degree-d slice of a homogeneous ideal, as reduced
 * row echelon vectors over the descending degrevlex monomial basis. */
template <class K>
std::vector<Poly<K>> degree_slice(const Ideal<K>& ideal, int d) {
    require(ideal.is_homogeneous(), ErrKind::NotHomogeneous, "slice of inhomogeneous ideal");
    int nv = ideal.nvars();
    long long chi = ideal.characteristic();
    std::vector<Monomial> mons = monomials_of_degree(d, nv);
    std::map<Monomial, int, CanonLess> index;
    for (size_t j = 0; j < mons.size(); ++j) index.emplace(mons[j], (int)j);

    std::vector<std::vector<K>> rows;
    for (const auto& g : ideal.gens()) {
        int dg = g.deg();
        if (dg > d) continue;
        for (const Monomial& m : monomials_of_degree(d - dg, nv))
            rows.push_back(poly_to_row(g.mul_term(m, K::one(chi)), index, chi));
    }
    Mat<K> mat((int)rows.size(), (int)mons.size(), K::from_int(0, chi));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < mons.size(); ++j) mat.at((int)i, (int)j) = rows[i][j];
    int rk = (int)rref(mat).size();

    std::vector<Poly<K>> out;
    for (int i = 0; i < rk; ++i) {
        std::vector<K> row(mons.size());
        for (size_t j = 0; j < mons.size(); ++j) row[j] = mat.at(i, (int)j);
        out.push_back(row_to_poly(row, mons, nv));
    }
    return out;
}

/* Minimal homogeneous generators, degree by degree (graded Nakayama). */
template <class K>
std::vector<Poly<K>> minimal_generators(const Ideal<K>& ideal) {
    if (ideal.is_zero_ideal()) return {};
    require(ideal.is_homogeneous(), ErrKind::NotHomogeneous,
            "minimal generators need a homogeneous ideal");
    int nv = ideal.nvars();
    long long chi = ideal.characteristic();
    int dmin = 1 << 28, dmax = 0;
    for (const auto& g : ideal.gens()) {
        dmin = std::min(dmin, g.deg());
        dmax = std::max(dmax, g.deg());
    }

    std::vector<Poly<K>> mins;
    for (int d = dmin; d <= dmax; ++d) {
        std::vector<Monomial> mons = monomials_of_degree(d, nv);
        std::map<Monomial, int, CanonLess> index;
        for (size_t j = 0; j < mons.size(); ++j) index.emplace(mons[j], (int)j);
        IncrementalSpan<K> span((int)mons.size(), chi);
        for (const auto& mg : mins)
            for (const Monomial& m : monomials_of_degree(d - mg.deg(), nv))
                span.add(poly_to_row(mg.mul_term(m, K::one(chi)), index, chi));
        for (const auto& v : degree_slice(ideal, d))
            if (span.add(poly_to_row(v, index, chi))) mins.push_back(v);
    }
    return mins;
}

/* number of minimal generators */
template <class K>
int mu(const Ideal<K>& ideal) {
    return (int)minimal_generators(ideal).size();
}

/* normalize a nonzero polynomial to leading coefficient 1 */
template <class K>
Poly<K> monic(const Poly<K>& f, const Ordering& ord = Ordering::degrevlex()) {
    if (f.is_zero()) return f;
    return f.scale(f.lead(ord).c.inv());
}

/* gcd of two polynomials through (f) ∩ (g) = (lcm) and f*g = gcd * lcm */
template <class K>
Poly<K> gcd_poly(const Poly<K>& f, const Poly<K>& g) {
    if (f.is_zero()) return monic(g);
    if (g.is_zero()) return monic(f);
    int nv = std::max(f.nvars(), g.nvars());
    long long chi = f.characteristic();
    Ideal<K> meet = intersect(Ideal<K>({f}, nv, chi), Ideal<K>({g}, nv, chi));
    const auto& basis = meet.gb();
    require(basis.size() == 1, ErrKind::Internal, "intersection of principal ideals not principal");
    auto [rem, cof] = normal_form_with_cofactors(f.extended(nv) * g.extended(nv), basis);
    require(rem.is_zero(), ErrKind::Internal, "product not divisible by the lcm");
    return monic(cof[0]);
}

template <class K>
Poly<K> gcd_poly(const std::vector<Poly<K>>& fs) {
    Poly<K> acc;
    bool started = false;
    for (const auto& f : fs) {
        if (f.is_zero()) continue;
        acc = started ? gcd_poly(acc, f) : monic(f);
        started = true;
    }
    require(started, ErrKind::DivisionByZero, "gcd of an empty or all-zero family");
    return acc;
}

}  // namespace cremona
