#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cremona/error.hpp"

namespace cremona {

/* Candidate characteristic (d; mu_1, ..., mu_r) of a plane Cremona map:
 * degree plus the multiset of base multiplicities, kept sorted descending. */
struct HomaloidalType {
    int d = 1;
    std::vector<int> mu;

    HomaloidalType() = default;
    HomaloidalType(int degree, std::vector<int> mults) : d(degree), mu(std::move(mults)) {
        require(d >= 1, ErrKind::InvalidType, "degree must be positive");
        for (int m : mu) require(m >= 1, ErrKind::InvalidType, "multiplicities must be positive");
        std::sort(mu.begin(), mu.end(), std::greater<int>());
    }

    bool operator==(const HomaloidalType& o) const { return d == o.d && mu == o.mu; }
    bool operator!=(const HomaloidalType& o) const { return !(*this == o); }

    long long mult_sum() const {
        long long s = 0;
        for (int m : mu) s += m;
        return s;
    }
    long long mult_square_sum() const {
        long long s = 0;
        for (int m : mu) s += (long long)m * m;
        return s;
    }

    /* the two equations of condition */
    bool satisfies_equations() const {
        return mult_sum() == 3LL * d - 3 && mult_square_sum() == (long long)d * d - 1;
    }

    std::string str() const {
        std::string s = "(" + std::to_string(d) + ";";
        size_t i = 0;
        while (i < mu.size()) {
            size_t j = i;
            while (j < mu.size() && mu[j] == mu[i]) ++j;
            s += (i ? ", " : " ") + std::to_string(mu[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s + ")";
    }
};

/* Accepts "(6; 4, 2^4, 1^3)" and unpadded variants like "6;4,2^4,1^3". */
inline HomaloidalType parse_homaloidal(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c) && c != '(' && c != ')') s += c;
    size_t semi = s.find(';');
    require(semi != std::string::npos, ErrKind::SyntaxError,
            "homaloidal type needs 'd; multiplicities'");
    auto to_int = [](const std::string& tok) {
        require(!tok.empty(), ErrKind::SyntaxError, "empty number in type");
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        require(used == tok.size() && v >= 0 && v < (1 << 20), ErrKind::SyntaxError,
                "bad number '" + tok + "' in type");
        return (int)v;
    };
    int d = to_int(s.substr(0, semi));
    std::vector<int> mu;
    size_t pos = semi + 1;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
        pos = comma == std::string::npos ? s.size() : comma + 1;
        if (item.empty()) continue;
        size_t caret = item.find('^');
        int value = to_int(caret == std::string::npos ? item : item.substr(0, caret));
        int count = caret == std::string::npos ? 1 : to_int(item.substr(caret + 1));
        require(count >= 1, ErrKind::SyntaxError, "multiplicity count must be positive");
        for (int k = 0; k < count; ++k) mu.push_back(value);
    }
    return HomaloidalType(d, std::move(mu));
}

/* All descending multisets solving the equations of condition for degree d.
 * mu_1 <= d-1 is automatic from the square equation. */
inline std::vector<HomaloidalType> enumerate_homaloidal(int d) {
    require(d >= 1 && d <= 12, ErrKind::OutOfRange, "enumeration supported for 1 <= d <= 12");
    long long target_sum = 3LL * d - 3, target_sq = (long long)d * d - 1;
    std::vector<HomaloidalType> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int maxv, long long sum, long long sq) -> void {
        if (sum == 0 && sq == 0) {
            out.push_back(HomaloidalType(d, cur));
            return;
        }
        for (int m = std::min<long long>(maxv, sum); m >= 1; --m) {
            if ((long long)m * m > sq) continue;
            // all remaining entries are <= m, so sum' entries need sum'/m <= #entries
            // and the square sum can reach at most m * sum'
            if ((long long)m * (sum - m) < sq - (long long)m * m) continue;
            cur.push_back(m);
            self(self, m, sum - m, sq - (long long)m * m);
            cur.pop_back();
        }
    };
    rec(rec, d - 1, target_sum, target_sq);
    return out;
}

enum class HudsonVerdict { Proper, Improper };

struct HudsonResult {
    HudsonVerdict verdict = HudsonVerdict::Improper;
    std::vector<HomaloidalType> chain;  // starts at the input, ends where it stopped
    std::string reason;                 // set when improper
};

/* Hudson's test: repeatedly apply the quadratic transformation based at the
 * three largest multiplicities.  The type is proper exactly when the chain
 * reaches the identity (1;). */
inline HudsonResult hudson_test(const HomaloidalType& start) {
    require(start.satisfies_equations(), ErrKind::InvalidType,
            "Hudson's test needs a type satisfying the equations of condition");
    HudsonResult res;
    HomaloidalType t = start;
    res.chain.push_back(t);
    while (t.d > 1) {
        int m1 = t.mu.size() > 0 ? t.mu[0] : 0;
        int m2 = t.mu.size() > 1 ? t.mu[1] : 0;
        int m3 = t.mu.size() > 2 ? t.mu[2] : 0;
        if (m1 + m2 + m3 <= t.d) {
            res.reason = "three largest multiplicities of " + t.str() +
                         " sum to at most the degree";
            return res;
        }
        int nd = 2 * t.d - m1 - m2 - m3;
        int n1 = t.d - m2 - m3, n2 = t.d - m1 - m3, n3 = t.d - m1 - m2;
        if (nd < 1 || n1 < 0 || n2 < 0 || n3 < 0) {
            res.reason = "quadratic transformation of " + t.str() +
                         " produces a negative entry";
            return res;
        }
        std::vector<int> next(t.mu.begin() + std::min<size_t>(3, t.mu.size()), t.mu.end());
        for (int v : {n1, n2, n3})
            if (v > 0) next.push_back(v);
        t = HomaloidalType(nd, std::move(next));
        res.chain.push_back(t);
        require((int)res.chain.size() <= start.d + 2, ErrKind::Internal,
                "Hudson chain failed to shrink");
    }
    if (!t.mu.empty()) {
        res.reason = "degree 1 with leftover multiplicities " + t.str();
        return res;
    }
    res.verdict = HudsonVerdict::Proper;
    return res;
}

}  // namespace cremona
