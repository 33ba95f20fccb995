#pragma once
#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace cremona {

/* Canonical storage comparator: degrevlex, descending when iterating. */
struct CanonLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Ordering::degrevlex().less(a, b);
    }
};

template <class K>
struct Term {
    Monomial m;
    K c;
};

/* Sparse polynomial: term list sorted descending under degrevlex.  The number
 * of active variables rides along so empty polynomials still know their ring. */
template <class K>
class Poly {
public:
    using Terms = std::vector<Term<K>>;

    Poly() = default;
    explicit Poly(int nvars) : nv_(nvars) {}
    Poly(Terms terms, int nvars) : t_(std::move(terms)), nv_(nvars) { canonicalize(); }

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(const K& c, int nvars) {
        Poly p(nvars);
        if (!c.is_zero()) p.t_.push_back({Monomial(nvars), c});
        return p;
    }
    static Poly monomial(const Monomial& m, const K& c) {
        Poly p(m.n);
        if (!c.is_zero()) p.t_.push_back({m, c});
        return p;
    }
    static Poly var(int i, int nvars, long long chi) {
        return monomial(Monomial::var(i, nvars), K::one(chi));
    }

    const Terms& terms() const { return t_; }
    int nvars() const { return nv_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    /* total degree; -1 for the zero polynomial */
    int deg() const {
        int d = -1;
        for (auto& t : t_) d = std::max(d, t.m.deg());
        return d;
    }

    bool is_homogeneous() const {
        for (auto& t : t_)
            if (t.m.deg() != t_.front().m.deg()) return false;
        return true;
    }

    bool is_bihomogeneous(int split = 3) const {
        for (auto& t : t_)
            if (t.m.bideg(split) != t_.front().m.bideg(split)) return false;
        return true;
    }

    std::pair<int, int> bideg(int split = 3) const {
        return t_.empty() ? std::pair<int, int>{-1, -1} : t_.front().m.bideg(split);
    }

    K coeff(const Monomial& m) const {
        for (auto& t : t_)
            if (t.m == m) return t.c;
        return K::from_int(0, characteristic());
    }

    /* leading term under an arbitrary order (linear scan) */
    const Term<K>& lead(const Ordering& ord) const {
        require(!t_.empty(), ErrKind::Internal, "lead term of zero polynomial");
        size_t best = 0;
        for (size_t i = 1; i < t_.size(); ++i)
            if (ord.less(t_[best].m, t_[i].m)) best = i;
        return t_[best];
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.t_) t.c = -t.c;
        return r;
    }

    Poly operator+(const Poly& o) const { return merged(o, false); }
    Poly operator-(const Poly& o) const { return merged(o, true); }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    Poly operator*(const Poly& o) const {
        Poly r(std::max(nv_, o.nv_));
        if (t_.empty() || o.t_.empty()) return r;
        std::map<Monomial, K, CanonLess> acc;
        for (auto& a : t_)
            for (auto& b : o.t_) {
                Monomial m = a.m * b.m;
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(m, a.c * b.c);
                else it->second += a.c * b.c;
            }
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!it->second.is_zero()) r.t_.push_back({it->first, it->second});
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly mul_term(const Monomial& m, const K& c) const {
        Poly r(std::max(nv_, (int)m.n));
        if (c.is_zero()) return r;
        r.t_.reserve(t_.size());
        for (auto& t : t_) {
            K cc = t.c * c;
            if (!cc.is_zero()) r.t_.push_back({t.m * m, cc});
        }
        return r;
    }

    Poly scale(const K& c) const { return mul_term(Monomial(nv_), c); }

    Poly pow(int e) const {
        require(e >= 0, ErrKind::OutOfRange, "negative power of a polynomial");
        Poly r = constant(K::one(characteristic()), nv_);
        Poly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    bool operator==(const Poly& o) const {
        if (t_.size() != o.t_.size()) return false;
        for (size_t i = 0; i < t_.size(); ++i)
            if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /* characteristic of the coefficients; falls back to 0 for an empty Q poly,
     * and to the default prime for an empty Fp poly (callers that care pass
     * the characteristic explicitly) */
    long long characteristic() const {
        if (!t_.empty()) return t_.front().c.characteristic();
        if constexpr (std::is_same_v<K, Fp>) return Fp::default_characteristic;
        return 0;
    }

    /* view this polynomial in a ring with more (or equally many) variables */
    Poly extended(int nvars) const {
        require(nvars >= nv_, ErrKind::OutOfRange, "extended() cannot drop variables");
        Poly r = *this;
        r.nv_ = nvars;
        for (auto& t : r.t_) t.m.n = (int8_t)nvars;
        return r;
    }

    /* drop trailing variables, which must not occur */
    Poly restricted(int nvars) const {
        Poly r = *this;
        r.nv_ = nvars;
        for (auto& t : r.t_) {
            for (int i = nvars; i < kMaxVars; ++i)
                require(t.m.e[i] == 0, ErrKind::OutOfRange, "restricted() would drop a used variable");
            t.m.n = (int8_t)nvars;
        }
        r.canonicalize();
        return r;
    }

    /* exact division by a monomial; caller guarantees divisibility */
    Poly div_monomial(const Monomial& m) const {
        Poly r(nv_);
        r.t_.reserve(t_.size());
        for (auto& t : t_) {
            require(m.divides(t.m), ErrKind::Internal, "div_monomial: not divisible");
            r.t_.push_back({t.m / m, t.c});
        }
        return r;
    }

    /* order of vanishing at the origin: the minimum total degree of a term */
    int order_at_origin() const {
        int o = -1;
        for (auto& t : t_) {
            int d = t.m.deg();
            if (o < 0 || d < o) o = d;
        }
        return o;   // -1 for the zero polynomial
    }

    /* substitute images[i] for variable i (every active variable needs an image) */
    Poly substitute(const std::vector<Poly>& images) const {
        require((int)images.size() >= nv_, ErrKind::OutOfRange, "substitute: missing images");
        int out_nv = 1;
        for (auto& im : images) out_nv = std::max(out_nv, im.nvars());
        long long chi = characteristic();
        for (auto& im : images)
            if (!im.is_zero()) chi = im.characteristic();
        // lazily cached powers of each image
        std::vector<std::vector<Poly>> pows(nv_);
        auto power = [&](int i, int e) -> const Poly& {
            auto& cache = pows[i];
            if (cache.empty()) cache.push_back(constant(K::one(chi), out_nv));
            while ((int)cache.size() <= e) cache.push_back(cache.back() * images[i].extended(out_nv));
            return cache[e];
        };
        Poly acc(out_nv);
        for (auto& t : t_) {
            Poly prod = constant(t.c, out_nv);
            for (int i = 0; i < nv_; ++i)
                if (t.m.e[i]) prod = prod * power(i, t.m.e[i]);
            acc += prod;
        }
        return acc;
    }

    /* the slice of terms of exact total degree d */
    Poly homogeneous_part(int d) const {
        Poly r(nv_);
        for (auto& t : t_)
            if (t.m.deg() == d) r.t_.push_back({t.m, t.c});
        return r;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& t : t_) {
            K c = t.c;
            bool neg = c.prints_negative();
            if (neg) c = -c;
            s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            first = false;
            std::string cs;
            if constexpr (std::is_same_v<K, Fp>) cs = std::to_string(c.value());
            else cs = c.str();
            if (t.m.is_one()) s += cs;
            else if (c.is_one()) s += t.m.str();
            else s += cs + "*" + t.m.str();
        }
        return s;
    }

private:
    Poly merged(const Poly& o, bool subtract) const {
        Poly r(std::max(nv_, o.nv_));
        r.t_.reserve(t_.size() + o.t_.size());
        CanonLess less;
        size_t i = 0, j = 0;
        while (i < t_.size() || j < o.t_.size()) {
            bool take_left;
            if (i == t_.size()) take_left = false;
            else if (j == o.t_.size()) take_left = true;
            else if (t_[i].m == o.t_[j].m) {
                K c = subtract ? t_[i].c - o.t_[j].c : t_[i].c + o.t_[j].c;
                if (!c.is_zero()) r.t_.push_back({t_[i].m, c});
                ++i; ++j;
                continue;
            } else take_left = less(o.t_[j].m, t_[i].m);
            if (take_left) { r.t_.push_back(t_[i]); ++i; }
            else {
                r.t_.push_back(o.t_[j]);
                if (subtract) r.t_.back().c = -r.t_.back().c;
                ++j;
            }
        }
        return r;
    }

    void canonicalize() {
        for (auto& t : t_) {
            require(t.m.n == nv_, ErrKind::Internal, "term with wrong variable count");
        }
        CanonLess less;
        std::stable_sort(t_.begin(), t_.end(),
                         [&](const Term<K>& a, const Term<K>& b) { return less(b.m, a.m); });
        Terms out;
        out.reserve(t_.size());
        for (auto& t : t_) {
            if (!out.empty() && out.back().m == t.m) out.back().c += t.c;
            else out.push_back(t);
            if (!out.empty() && out.back().c.is_zero()) out.pop_back();
        }
        t_ = std::move(out);
    }

    Terms t_;
    int nv_ = 3;
};

using PolyFp = Poly<Fp>;
using PolyQ = Poly<Rat>;

/* ---------- parsing ---------- */

/* Grammar: sums of products of factors; a factor is a variable, an integer, or
 * a parenthesized expression, optionally raised to a nonnegative integer power.
 * '*' is optional (juxtaposition multiplies).  Whitespace is ignored. */
template <class K>
class PolyParser {
public:
    PolyParser(const std::string& s, int nvars, long long chi)
        : s_(s), nv_(nvars), chi_(chi) {}

    Poly<K> parse() {
        Poly<K> p = expr();
        skip_ws();
        require(pos_ == s_.size(), ErrKind::SyntaxError,
                "unexpected character at position " + std::to_string(pos_));
        return p;
    }

private:
    Poly<K> expr() {
        Poly<K> acc(nv_);
        bool neg = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Poly<K> t = term();
            acc = (c == '-') ? acc - t : acc + t;
        }
        return acc;
    }

    Poly<K> term() {
        Poly<K> acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                get();
                acc = acc * factor();
            } else if (c == '(' || std::isdigit((unsigned char)c) || var_index(c) >= 0) {
                acc = acc * factor();   // juxtaposition
            } else break;
        }
        return acc;
    }

    Poly<K> factor() {
        Poly<K> base = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            require(std::isdigit((unsigned char)peek()), ErrKind::SyntaxError,
                    "expected integer exponent at position " + std::to_string(pos_));
            long long e = integer();
            require(e >= 0 && e < 1000, ErrKind::SyntaxError, "exponent out of range");
            base = base.pow((int)e);
        }
        return base;
    }

    Poly<K> atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Poly<K> p = expr();
            skip_ws();
            require(peek() == ')', ErrKind::SyntaxError,
                    "expected ')' at position " + std::to_string(pos_));
            get();
            return p;
        }
        if (std::isdigit((unsigned char)c)) return Poly<K>::constant(K::from_int(integer(), chi_), nv_);
        int vi = var_index(c);
        if (vi >= 0) {
            require(vi < nv_, ErrKind::SyntaxError,
                    std::string("variable '") + c + "' not in ring at position " + std::to_string(pos_));
            get();
            return Poly<K>::var(vi, nv_, chi_);
        }
        fail(ErrKind::SyntaxError, "unexpected character at position " + std::to_string(pos_));
    }

    long long integer() {
        long long v = 0;
        while (std::isdigit((unsigned char)peek())) {
            v = v * 10 + (get() - '0');
            require(v < (1LL << 62) / 10, ErrKind::SyntaxError, "integer literal too large");
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }

    const std::string& s_;
    size_t pos_ = 0;
    int nv_;
    long long chi_;
};

template <class K>
Poly<K> parse_poly(const std::string& s, int nvars = 3,
                   long long chi = std::is_same_v<K, Fp> ? Fp::default_characteristic : 0) {
    return PolyParser<K>(s, nvars, chi).parse();
}

} // namespace cremona
