#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/linalg.hpp"
#include "cremona/points.hpp"

namespace cremona {

/* A node of a weighted cluster.  Roots carry a point of P^2; an infinitely
 * near node records where it sits on the exceptional line of its parent:
 * chart X with parameter c is the direction (1 : c), chart Y is (0 : 1). */
template <class K>
struct ClusterNode {
    enum class Chart { None, X, Y };

    int parent = -1;
    int mult = 0;
    std::optional<ProjPoint<K>> pt;  // roots only
    Chart chart = Chart::None;       // non-roots only
    K param{};                       // chart X only
};

template <class K>
struct WeightedCluster {
    std::vector<ClusterNode<K>> nodes;
    std::vector<std::pair<int, int>> extra_prox;  // satellite: (node, non-parent ancestor)
    long long chi = 0;

    int size() const { return (int)nodes.size(); }

    bool is_ancestor(int anc, int q) const {
        for (int w = nodes[q].parent; w >= 0; w = nodes[w].parent)
            if (w == anc) return true;
        return false;
    }

    void validate() const {
        for (int i = 0; i < size(); ++i) {
            const auto& n = nodes[i];
            require(n.parent < i, ErrKind::InvalidCluster, "parent must precede child");
            require(n.mult >= 0, ErrKind::InvalidCluster, "negative multiplicity");
            if (n.parent < 0)
                require(n.pt.has_value() && n.chart == ClusterNode<K>::Chart::None,
                        ErrKind::InvalidCluster, "root node needs a point and no chart");
            else
                require(!n.pt.has_value() && n.chart != ClusterNode<K>::Chart::None,
                        ErrKind::InvalidCluster, "near node needs a chart and no point");
        }
        for (auto& [q, p] : extra_prox) {
            require(q >= 0 && q < size() && p >= 0 && p < size(), ErrKind::InvalidCluster,
                    "proximity index out of range");
            require(p != nodes[q].parent, ErrKind::InvalidCluster,
                    "parent proximity is implicit");
            require(is_ancestor(p, q), ErrKind::InvalidCluster,
                    "proximity must point at an ancestor");
        }
    }

    /* multiplicities in node order */
    std::vector<int> mults() const {
        std::vector<int> m;
        for (const auto& n : nodes) m.push_back(n.mult);
        return m;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            const auto& n = nodes[i];
            s += std::to_string(i) + " ";
            s += n.parent < 0 ? "-" : std::to_string(n.parent);
            s += " ";
            if (n.parent < 0) {
                for (int j = 0; j < 3; ++j)
                    s += (j ? ":" : "") + Poly<K>::constant(n.pt->c[j], 1).str();
            } else if (n.chart == ClusterNode<K>::Chart::X) {
                s += "X:" + Poly<K>::constant(n.param, 1).str();
            } else {
                s += "Y";
            }
            s += " " + std::to_string(n.mult) + "\n";
        }
        for (auto& [q, p] : extra_prox)
            s += "prox " + std::to_string(q) + " " + std::to_string(p) + "\n";
        return s;
    }
};

namespace detail {

/* f localized at a root point: the point goes to the origin of its leading
 * affine chart and the two residual coordinates become variables 0 and 1. */
template <class K>
Poly<K> localize_at_root(const Poly<K>& f, const ProjPoint<K>& p, long long chi) {
    int lead = 0;
    while (p.c[lead].is_zero()) ++lead;
    std::vector<Poly<K>> images(3, Poly<K>(3));
    int slot = 0;
    std::array<int, kMaxVars> perm{};
    for (int i = 0; i < kMaxVars; ++i) perm[i] = i;
    for (int i = 0; i < 3; ++i) {
        if (i == lead) {
            images[i] = Poly<K>::constant(K::one(chi), 3);
        } else {
            images[i] = Poly<K>::var(i, 3, chi) + Poly<K>::constant(p.c[i], 3);
            perm[i] = slot++;
        }
    }
    require(slot == 2, ErrKind::Internal, "chart has two local coordinates");
    perm[lead] = 2;
    return permute_vars(f.substitute(images), perm);
}

/* one blow-up step: pull back along the chart of `node` and divide by the
 * exceptional power given by the parent's virtual multiplicity */
template <class K>
Poly<K> descend(const Poly<K>& loc, const ClusterNode<K>& node, int parent_mult, long long chi) {
    std::vector<Poly<K>> images(3, Poly<K>(3));
    Poly<K> u = Poly<K>::var(0, 3, chi), v = Poly<K>::var(1, 3, chi);
    int exc_var;
    if (node.chart == ClusterNode<K>::Chart::X) {
        images[0] = u;
        images[1] = u * (v + Poly<K>::constant(node.param, 3));
        exc_var = 0;
    } else {
        images[0] = u * v;
        images[1] = v;
        exc_var = 1;
    }
    images[2] = Poly<K>(3);
    Poly<K> pulled = loc.substitute(images);
    return pulled.div_monomial(Monomial::var(exc_var, 3, parent_mult));
}

}  // namespace detail

/* Virtual transform of f at node q: localize at the root, then blow up down
 * the ancestor chain dividing by the ancestors' virtual multiplicities.
 * Empty when f fails an ancestor's multiplicity, so the division would not
 * be defined. */
template <class K>
std::optional<Poly<K>> virtual_transform(const Poly<K>& f, const WeightedCluster<K>& cl, int q) {
    long long chi = cl.chi;
    std::vector<int> path;  // root .. q
    for (int w = q; w >= 0; w = cl.nodes[w].parent) path.push_back(w);
    std::reverse(path.begin(), path.end());

    Poly<K> loc = detail::localize_at_root(f, *cl.nodes[path[0]].pt, chi);
    for (size_t i = 1; i < path.size(); ++i) {
        int anc = path[i - 1];
        if (loc.order_at_origin() < cl.nodes[anc].mult) return std::nullopt;
        loc = detail::descend(loc, cl.nodes[path[i]], cl.nodes[anc].mult, chi);
    }
    return loc;
}

/* f passes virtually through the weighted cluster */
template <class K>
bool passes_virtually(const Poly<K>& f, const WeightedCluster<K>& cl) {
    require(!f.is_zero(), ErrKind::InvalidCluster, "virtual passage of the zero form");
    for (int q = 0; q < cl.size(); ++q) {
        auto t = virtual_transform(f, cl, q);
        if (!t) return false;
        if (!t->is_zero() && t->order_at_origin() < cl.nodes[q].mult) return false;
    }
    return true;
}

/* Basis of the forms of degree d passing virtually through the cluster,
 * as canonical echelon vectors over the degree-d monomials. */
template <class K>
std::vector<Poly<K>> forms_through_cluster(const WeightedCluster<K>& cl, int d) {
    long long chi = cl.chi;
    std::vector<Monomial> mons = monomials_of_degree(d, 3);
    int n = (int)mons.size();

    // basis of the surviving subspace, as rows over the monomial coordinates
    std::vector<std::vector<K>> basis;
    for (int i = 0; i < n; ++i) {
        std::vector<K> row(n, K::from_int(0, chi));
        row[i] = K::one(chi);
        basis.push_back(std::move(row));
    }

    for (int q = 0; q < cl.size() && !basis.empty(); ++q) {
        int nu = cl.nodes[q].mult;
        if (nu <= 0) continue;
        // local monomials u^a v^b with a+b < nu give the linear conditions
        std::vector<Monomial> conds;
        for (int a = 0; a < nu; ++a)
            for (int b = 0; a + b < nu; ++b) {
                Monomial m(3);
                m.e[0] = (int16_t)a;
                m.e[1] = (int16_t)b;
                conds.push_back(m);
            }
        Mat<K> c((int)conds.size(), (int)basis.size(), K::from_int(0, chi));
        for (size_t i = 0; i < basis.size(); ++i) {
            Poly<K> f = row_to_poly(basis[i], mons, 3);
            auto t = virtual_transform(f, cl, q);
            require(t.has_value(), ErrKind::Internal,
                    "basis element lost an ancestor condition");
            for (size_t r = 0; r < conds.size(); ++r) c.at((int)r, (int)i) = t->coeff(conds[r]);
        }
        std::vector<std::vector<K>> kernel = kernel_basis(c, chi);
        std::vector<std::vector<K>> next;
        for (const auto& comb : kernel) {
            std::vector<K> row(n, K::from_int(0, chi));
            for (size_t i = 0; i < basis.size(); ++i) {
                if (comb[i].is_zero()) continue;
                for (int j = 0; j < n; ++j) row[j] = row[j] + comb[i] * basis[i][j];
            }
            next.push_back(std::move(row));
        }
        basis = std::move(next);
    }

    if (basis.empty()) return {};
    Mat<K> m((int)basis.size(), n, K::from_int(0, chi));
    for (size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < n; ++j) m.at((int)i, j) = basis[i][j];
    int rk = (int)rref(m).size();
    std::vector<Poly<K>> out;
    for (int i = 0; i < rk; ++i) {
        std::vector<K> row(n);
        for (int j = 0; j < n; ++j) row[j] = m.at(i, j);
        out.push_back(row_to_poly(row, mons, 3));
    }
    return out;
}

/* Unit lower triangular proximity matrix: P[q][q] = 1, P[q][p] = -1 when q
 * is proximate to p (parent, plus any recorded satellite relations). */
template <class K>
std::vector<std::vector<int>> proximity_matrix(const WeightedCluster<K>& cl) {
    int n = cl.size();
    std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        p[i][i] = 1;
        if (cl.nodes[i].parent >= 0) p[i][cl.nodes[i].parent] = -1;
    }
    for (auto& [q, a] : cl.extra_prox) p[q][a] = -1;
    return p;
}

/* inverse of a unit lower triangular integer matrix, by forward substitution */
inline std::vector<std::vector<long long>> unitriangular_inverse(
    const std::vector<std::vector<int>>& p) {
    int n = (int)p.size();
    std::vector<std::vector<long long>> x(n, std::vector<long long>(n, 0));
    for (int j = 0; j < n; ++j) {
        x[j][j] = 1;
        for (int i = j + 1; i < n; ++i) {
            long long acc = 0;
            for (int k = j; k < i; ++k) acc += (long long)p[i][k] * x[k][j];
            x[i][j] = -acc;
        }
    }
    return x;
}

/* Text format, one node per line:
 *   <id> <parent|-> <a:b:c | X:c | Y> <mult>
 * followed by optional satellite lines:
 *   prox <node> <ancestor>
 * Field elements are integers or fractions a/b.  '#' starts a comment. */
template <class K>
WeightedCluster<K> parse_cluster(const std::string& text, long long chi) {
    auto parse_elem = [&](const std::string& tok) -> K {
        size_t slash = tok.find('/');
        auto to_ll = [&](const std::string& s) -> long long {
            size_t used = 0;
            long long v = std::stoll(s, &used);
            require(used == s.size(), ErrKind::SyntaxError, "bad number '" + s + "'");
            return v;
        };
        if (slash == std::string::npos) return K::from_int(to_ll(tok), chi);
        K num = K::from_int(to_ll(tok.substr(0, slash)), chi);
        K den = K::from_int(to_ll(tok.substr(slash + 1)), chi);
        require(!den.is_zero(), ErrKind::SyntaxError, "zero denominator");
        return num * den.inv();
    };

    WeightedCluster<K> cl;
    cl.chi = chi;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;

        if (first == "prox") {
            int q, a;
            require(bool(ls >> q >> a), ErrKind::SyntaxError, "prox needs two node ids");
            cl.extra_prox.push_back({q, a});
            continue;
        }

        ClusterNode<K> node;
        std::string parent, spec;
        int mult;
        require(bool(ls >> parent >> spec >> mult), ErrKind::SyntaxError,
                "node line needs: id parent spec mult");
        size_t used = 0;
        int id = (int)std::stol(first, &used);
        require(used == first.size() && id == (int)cl.nodes.size(), ErrKind::SyntaxError,
                "node ids must be 0,1,2,... in order");
        node.parent = parent == "-" ? -1 : (int)std::stol(parent);
        node.mult = mult;
        if (node.parent < 0) {
            size_t c1 = spec.find(':'), c2 = spec.rfind(':');
            require(c1 != std::string::npos && c2 != c1, ErrKind::SyntaxError,
                    "root point must be a:b:c");
            node.pt = ProjPoint<K>(parse_elem(spec.substr(0, c1)),
                                   parse_elem(spec.substr(c1 + 1, c2 - c1 - 1)),
                                   parse_elem(spec.substr(c2 + 1)));
        } else if (spec == "Y") {
            node.chart = ClusterNode<K>::Chart::Y;
        } else {
            require(spec.rfind("X:", 0) == 0, ErrKind::SyntaxError,
                    "near point spec must be X:<c> or Y");
            node.chart = ClusterNode<K>::Chart::X;
            node.param = parse_elem(spec.substr(2));
        }
        cl.nodes.push_back(std::move(node));
    }
    cl.validate();
    return cl;
}

}  // namespace cremona
