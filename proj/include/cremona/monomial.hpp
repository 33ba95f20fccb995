#pragma once
#include <array>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace cremona {

/* Variable name table.  Indices 0..2 are the coordinate ring of P^2, indices
 * 3..5 are the image coordinates used for Rees computations, index 6 the graph
 * variable, index 7 an auxiliary variable for saturation/intersection tricks. */
constexpr int kMaxVars = 8;
constexpr const char* kVarNames[kMaxVars] = {"x", "y", "z", "t", "u", "v", "w", "h"};

inline int var_index(char c) {
    switch (c) {
        case 'x': return 0; case 'y': return 1; case 'z': return 2;
        case 't': return 3; case 'u': return 4; case 'v': return 5;
        case 'w': return 6; case 'h': return 7;
        default: return -1;
    }
}

struct Monomial {
    std::array<int16_t, kMaxVars> e{};
    int8_t n = 3;   // number of active variables

    Monomial() = default;
    explicit Monomial(int nvars) : n((int8_t)nvars) {}

    static Monomial var(int i, int nvars, int power = 1) {
        Monomial m(nvars);
        m.e[i] = (int16_t)power;
        return m;
    }

    int deg() const {
        int d = 0;
        for (int i = 0; i < n; ++i) d += e[i];
        return d;
    }

    /* (degree in vars < split, degree in vars >= split) */
    std::pair<int, int> bideg(int split = 3) const {
        int a = 0, b = 0;
        for (int i = 0; i < n; ++i) (i < split ? a : b) += e[i];
        return {a, b};
    }

    bool is_one() const {
        for (int i = 0; i < n; ++i)
            if (e[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return n == o.n && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    Monomial operator*(const Monomial& o) const {
        Monomial r(std::max(n, o.n));
        for (int i = 0; i < r.n; ++i) r.e[i] = (int16_t)(e[i] + o.e[i]);
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /* quotient this/o; caller guarantees divisibility */
    Monomial operator/(const Monomial& o) const {
        Monomial r(n);
        for (int i = 0; i < n; ++i) r.e[i] = (int16_t)(e[i] - o.e[i]);
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(std::max(a.n, b.n));
        for (int i = 0; i < r.n; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(std::max(a.n, b.n));
        for (int i = 0; i < r.n; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < n; ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += kVarNames[i];
            if (e[i] > 1) s += "^" + std::to_string((int)e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

enum class OrderKind { DegRevLex, Lex, EliminationBlock, BigradedDegRevLex };

/* A global monomial order.  EliminationBlock compares the block of variables
 * with index < split first (degrevlex within each block), so a Groebner basis
 * element whose lead term avoids that block lies entirely in the remaining
 * variables.  BigradedDegRevLex compares the bidegree (split at `split`)
 * lexicographically, then falls back to degrevlex. */
struct Ordering {
    OrderKind kind = OrderKind::DegRevLex;
    int split = 3;

    static Ordering degrevlex() { return {OrderKind::DegRevLex, 3}; }
    static Ordering lex() { return {OrderKind::Lex, 3}; }
    static Ordering elim(int split) { return {OrderKind::EliminationBlock, split}; }
    static Ordering bigraded(int split = 3) { return {OrderKind::BigradedDegRevLex, split}; }

    /* negative if a < b, 0 if equal, positive if a > b */
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::DegRevLex: return cmp_drl(a, b, 0, kMaxVars);
            case OrderKind::Lex: {
                for (int i = 0; i < kMaxVars; ++i)
                    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
                return 0;
            }
            case OrderKind::EliminationBlock: {
                if (int c = cmp_drl(a, b, 0, split)) return c;
                return cmp_drl(a, b, split, kMaxVars);
            }
            case OrderKind::BigradedDegRevLex: {
                auto [a1, a2] = a.bideg(split);
                auto [b1, b2] = b.bideg(split);
                if (a1 != b1) return a1 < b1 ? -1 : 1;
                if (a2 != b2) return a2 < b2 ? -1 : 1;
                return cmp_drl(a, b, 0, kMaxVars);
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

private:
    static int cmp_drl(const Monomial& a, const Monomial& b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
        if (da != db) return da < db ? -1 : 1;
        // reverse lex tie-break: last variable with a difference, smaller exponent wins
        for (int i = hi - 1; i >= lo; --i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
};

} // namespace cremona
