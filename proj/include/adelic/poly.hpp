#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adelic/errors.hpp"
#include "adelic/field.hpp"

namespace adelic {

// Monomial u^i * v^j.
struct Monomial {
    unsigned u = 0;
    unsigned v = 0;

    unsigned total() const { return u + v; }
    friend bool operator==(Monomial a, Monomial b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(Monomial a, Monomial b) { return !(a == b); }
};

// Graded reverse lexicographic order with u > v. For two variables this is
// (total degree, then u-exponent).
struct MonomialOrder {
    static constexpr const char* kind = "grevlex-u>v";

    static bool less(Monomial a, Monomial b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.u < b.u;
    }
    static bool greater(Monomial a, Monomial b) { return less(b, a); }
};

// Map comparator placing the leading monomial first.
struct MonomialGreater {
    bool operator()(Monomial a, Monomial b) const { return MonomialOrder::greater(a, b); }
};

inline bool divides(Monomial a, Monomial b) { return a.u <= b.u && a.v <= b.v; }
inline Monomial operator*(Monomial a, Monomial b) { return {a.u + b.u, a.v + b.v}; }
inline Monomial quotient(Monomial a, Monomial b) { return {a.u - b.u, a.v - b.v}; }
inline Monomial lcm(Monomial a, Monomial b) { return {std::max(a.u, b.u), std::max(a.v, b.v)}; }

// Sparse exact bivariate polynomial over a coefficient field K. Terms are
// kept in descending monomial order; no zero coefficient is ever stored.
template <class K>
class Poly2 {
public:
    using term_map = std::map<Monomial, K, MonomialGreater>;

    Poly2() = default;

    static Poly2 monomial(Monomial m, K c) {
        Poly2 r;
        r.add_term(m, std::move(c));
        return r;
    }
    static Poly2 constant(K c) { return monomial({0, 0}, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const term_map& terms() const { return terms_; }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.total()));
        return d;
    }
    unsigned degree_u() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.u);
        return d;
    }
    unsigned degree_v() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.v);
        return d;
    }
    // Least u-exponent over all terms (the u-adic order for nonzero input).
    unsigned min_exponent_u() const {
        unsigned d = ~0u;
        for (const auto& [m, c] : terms_) d = std::min(d, m.u);
        return d;
    }
    bool depends_on_v() const {
        for (const auto& [m, c] : terms_)
            if (m.v > 0) return true;
        return false;
    }

    Monomial leading_monomial() const {
        if (is_zero()) throw std::logic_error("leading monomial of zero");
        return terms_.begin()->first;
    }
    const K& leading_coefficient() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero");
        return terms_.begin()->second;
    }

    void add_term(Monomial m, K c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        Poly2 r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly2 operator-(const Poly2& a, const Poly2& b) {
        Poly2 r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Poly2 operator-() const {
        Poly2 r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly2& operator+=(const Poly2& o) { return *this = *this + o; }
    Poly2& operator-=(const Poly2& o) { return *this = *this - o; }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

    Poly2 times_term(Monomial m, const K& c) const {
        Poly2 r;
        if (c.is_zero()) return r;
        for (const auto& [mm, cc] : terms_) r.add_term(mm * m, cc * c);
        return r;
    }
    Poly2 times_scalar(const K& c) const { return times_term({0, 0}, c); }

    Poly2 monic() const {
        if (is_zero()) return *this;
        return times_scalar(leading_coefficient().inverse());
    }

    // Drop all terms of total degree >= bound.
    Poly2 truncated(unsigned bound) const {
        Poly2 r;
        for (const auto& [m, c] : terms_)
            if (m.total() < bound) r.terms_.emplace(m, c);
        return r;
    }

    K coefficient(Monomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K() : it->second;
    }

    K evaluate(const K& a, const K& b) const {
        K acc;
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (unsigned i = 0; i < m.u; ++i) t *= a;
            for (unsigned j = 0; j < m.v; ++j) t *= b;
            acc += t;
        }
        return acc;
    }

    // f(u + a, v + b), exact (binomial expansion per term).
    Poly2 shifted(const K& a, const K& b, const K& one) const {
        Poly2 ushift;
        ushift.add_term({1, 0}, one);
        ushift.add_term({0, 0}, a);
        Poly2 vshift;
        vshift.add_term({0, 1}, one);
        vshift.add_term({0, 0}, b);
        Poly2 r;
        for (const auto& [m, c] : terms_) {
            Poly2 t = Poly2::constant(c);
            for (unsigned i = 0; i < m.u; ++i) t *= ushift;
            for (unsigned j = 0; j < m.v; ++j) t *= vshift;
            r += t;
        }
        return r;
    }

    friend bool operator==(const Poly2& a, const Poly2& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = a.terms_.begin();
        auto jt = b.terms_.begin();
        for (; it != a.terms_.end(); ++it, ++jt)
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        return true;
    }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

private:
    term_map terms_;
};

// Division by a single divisor: f = q*g + r with no term of r divisible by
// the leading monomial of g. For a single g this computes the normal form
// modulo the principal ideal (g).
template <class K>
std::pair<Poly2<K>, Poly2<K>> divide(const Poly2<K>& f, const Poly2<K>& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly2<K> q, r, work = f;
    Monomial lm = g.leading_monomial();
    const K& lc = g.leading_coefficient();
    while (!work.is_zero()) {
        bool reduced = false;
        for (const auto& [m, c] : work.terms()) {
            if (divides(lm, m)) {
                K factor = c / lc;
                Monomial mq = quotient(m, lm);
                q.add_term(mq, factor);
                work -= g.times_term(mq, factor);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // no term reducible: everything left is remainder
            r += work;
            break;
        }
    }
    return {q, r};
}

template <class K>
std::optional<Poly2<K>> try_exact_divide(const Poly2<K>& f, const Poly2<K>& g) {
    auto [q, r] = divide(f, g);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

// Deterministic enumeration-order comparison: total degree, then term
// count, then termwise (greater monomial first, then smaller coefficient).
template <class K>
bool poly_order_less(const Poly2<K>& a, const Poly2<K>& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
    auto it = a.terms().begin();
    auto jt = b.terms().begin();
    for (; it != a.terms().end(); ++it, ++jt) {
        if (it->first != jt->first) return MonomialOrder::greater(it->first, jt->first);
        if (!(it->second == jt->second)) return canonical_less(it->second, jt->second);
    }
    return false;
}

// ---- canonical text form ----------------------------------------------
//
// Terms sorted by the monomial order, descending; " + " / " - " separators
// (the latter only over Q); "1*" never written; exponent 1 never written.
// Examples: "u^11*v^2 + u^10*v^3", "u - 3/2*v", "0".

namespace detail {

inline std::string monomial_string(Monomial m) {
    std::string s;
    if (m.u > 0) {
        s += "u";
        if (m.u > 1) s += "^" + std::to_string(m.u);
    }
    if (m.v > 0) {
        if (!s.empty()) s += "*";
        s += "v";
        if (m.v > 1) s += "^" + std::to_string(m.v);
    }
    return s;
}

template <class K>
std::string term_string(Monomial m, const K& magnitude) {
    std::string ms = monomial_string(m);
    if (ms.empty()) return magnitude.to_string();
    if (magnitude.is_one()) return ms;
    return magnitude.to_string() + "*" + ms;
}

} // namespace detail

template <class K>
std::string to_canonical_string(const Poly2<K>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        bool neg = c.is_negative();
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += detail::term_string(m, c.abs());
    }
    return out;
}

namespace detail {

// Strict parser for the canonical form. Anything the printer would not
// emit is rejected, so parse and print are mutually inverse.
template <class Ctx>
class PolyParser {
public:
    using K = typename Ctx::element;

    PolyParser(const Ctx& ctx, std::string_view s) : ctx_(ctx), s_(s) {}

    Poly2<K> parse() {
        if (s_ == "0") return Poly2<K>();
        Poly2<K> out;
        bool negative = consume_char('-');
        std::optional<Monomial> previous;
        while (true) {
            auto [m, c] = parse_term(negative);
            if (previous && !MonomialOrder::greater(*previous, m))
                fail_schema("non-canonical polynomial: terms out of order in '" + std::string(s_) + "'");
            previous = m;
            if (!out.coefficient(m).is_zero()) fail_schema("duplicate monomial in polynomial literal");
            out.add_term(m, c);
            if (pos_ == s_.size()) break;
            if (consume_str(" + "))
                negative = false;
            else if (consume_str(" - "))
                negative = true;
            else
                fail_schema("bad polynomial literal: '" + std::string(s_) + "'");
        }
        return out;
    }

private:
    std::pair<Monomial, K> parse_term(bool negative) {
        std::string coeff_lit;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
            coeff_lit += s_[pos_++];
        Monomial m{0, 0};
        bool has_mono = false;
        if (!coeff_lit.empty()) {
            if (peek_char('*')) {
                ++pos_;
                m = parse_monomial();
                has_mono = true;
            }
        } else {
            m = parse_monomial();
            has_mono = true;
        }
        K c;
        if (coeff_lit.empty()) {
            c = ctx_.one();
        } else {
            c = ctx_.parse(coeff_lit);
            if (c.is_zero()) fail_schema("zero coefficient in polynomial literal");
            if (has_mono && c.is_one()) fail_schema("non-canonical coefficient '1*' in polynomial literal");
        }
        if (negative) c = -c;
        return {m, c};
    }

    Monomial parse_monomial() {
        Monomial m{0, 0};
        if (peek_char('u')) {
            ++pos_;
            m.u = parse_exponent();
            if (peek_char('*') && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'v') ++pos_;
        }
        if (peek_char('v')) {
            ++pos_;
            m.v = parse_exponent();
        }
        if (m.u == 0 && m.v == 0) fail_schema("bad monomial in polynomial literal: '" + std::string(s_) + "'");
        return m;
    }

    unsigned parse_exponent() {
        if (!peek_char('^')) return 1;
        ++pos_;
        std::string lit;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) lit += s_[pos_++];
        if (!canonical_integer_literal(lit)) fail_schema("bad exponent literal");
        unsigned long long e = std::stoull(lit);
        if (e < 2) fail_schema("non-canonical exponent in polynomial literal");
        return static_cast<unsigned>(e);
    }

    bool peek_char(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool consume_char(char c) {
        if (peek_char(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool consume_str(std::string_view t) {
        if (s_.substr(pos_, t.size()) == t) {
            pos_ += t.size();
            return true;
        }
        return false;
    }

    const Ctx& ctx_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <class Ctx>
Poly2<typename Ctx::element> parse_poly(const Ctx& ctx, std::string_view s) {
    detail::PolyParser<Ctx> p(ctx, s);
    auto out = p.parse();
    if (to_canonical_string(out) != s) fail_schema("non-canonical polynomial literal: '" + std::string(s) + "'");
    return out;
}

// ---- univariate helpers (dense, for diagonals and line restrictions) ----

template <class K>
std::string to_canonical_string_univariate(const std::vector<K>& coeffs, const std::string& var) {
    std::string out;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const K& c = coeffs[k];
        if (c.is_zero()) continue;
        bool neg = c.is_negative();
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string ms;
        if (k > 0) {
            ms = var;
            if (k > 1) ms += "^" + std::to_string(k);
        }
        K mag = c.abs();
        if (ms.empty())
            out += mag.to_string();
        else if (mag.is_one())
            out += ms;
        else
            out += mag.to_string() + "*" + ms;
    }
    return out.empty() ? "0" : out;
}

} // namespace adelic
