#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adelic/errors.hpp"

namespace adelic {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Element of F_p for a runtime modulus p, 2 <= p < 2^31.
//
// A default-constructed element is the neutral zero: it carries no modulus
// and adopts the modulus of the first bound operand it meets. Only zero may
// be unbound; every nonzero element knows its field.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint32_t p) : p_(p), v_(value % p) {}

    static Fp from_signed(std::int64_t value, std::uint32_t p) {
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::uint32_t modulus() const { return p_; }
    std::uint64_t value() const { return v_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint32_t m = join(a, b);
        if (m == 0) return Fp();
        return Fp((a.v_ + b.v_) % m, m);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint32_t m = join(a, b);
        if (m == 0) return Fp();
        return Fp((a.v_ + m - b.v_) % m, m);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint32_t m = join(a, b);
        if (m == 0) return Fp();
        return Fp((a.v_ * b.v_) % m, m);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const {
        if (p_ == 0) return Fp();
        return Fp((p_ - v_) % p_, p_);
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid on (v, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = static_cast<std::int64_t>(v_);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += p_;
        return Fp(static_cast<std::uint64_t>(t), p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.v_ == 0 && b.v_ == 0) return true;
        return join(a, b) != 0 && a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string to_string() const { return std::to_string(v_); }
    bool is_negative() const { return false; }
    Fp abs() const { return *this; }

    // Residue order, used only as a deterministic tie-break.
    friend bool canonical_less(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

private:
    static std::uint32_t join(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
        throw std::logic_error("Fp: mixed moduli");
    }

    std::uint32_t p_ = 0;
    std::uint64_t v_ = 0;
};

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (cpp_rational maintains the canonical form).
class Rat {
public:
    Rat() = default;
    explicit Rat(long long n) : v_(n) {}
    explicit Rat(const BigRational& v) : v_(v) {}
    Rat(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = BigRational(num, den);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }
    Rat abs() const { return v_ < 0 ? Rat(BigRational(-v_)) : *this; }
    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(BigRational(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(BigRational(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(BigRational(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(BigRational(a.v_ / b.v_));
    }
    Rat operator-() const { return Rat(BigRational(-v_)); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(BigRational(1 / v_));
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    std::string to_string() const {
        BigInt n = numerator(), d = denominator();
        if (d == 1) return n.str();
        return n.str() + "/" + d.str();
    }

    friend bool canonical_less(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

private:
    BigRational v_;
};

namespace detail {

inline bool digits_only(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline bool canonical_integer_literal(std::string_view s) {
    if (!digits_only(s)) return false;
    return s.size() == 1 || s[0] != '0'; // no leading zeros
}

} // namespace detail

// Field descriptor used at the boundary between runtime tags ("f2", "q")
// and the two coefficient types.
enum class FieldKind { prime, rational };

struct FieldSpec {
    FieldKind kind = FieldKind::prime;
    std::uint32_t p = 2;

    std::string tag() const { return kind == FieldKind::rational ? "q" : "f" + std::to_string(p); }

    static FieldSpec parse_tag(std::string_view tag) {
        if (tag == "q") return FieldSpec{FieldKind::rational, 0};
        if (tag.size() >= 2 && tag[0] == 'f' && detail::canonical_integer_literal(tag.substr(1))) {
            unsigned long long p = std::stoull(std::string(tag.substr(1)));
            if (p < 2 || p >= (1ull << 31)) fail_schema("field tag out of range: " + std::string(tag));
            if (!is_small_prime(static_cast<std::uint32_t>(p)))
                fail_schema("field tag modulus is not prime: " + std::string(tag));
            return FieldSpec{FieldKind::prime, static_cast<std::uint32_t>(p)};
        }
        fail_schema("unrecognized field tag: " + std::string(tag));
    }

    static bool is_small_prime(std::uint32_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }
};

// Runtime context for F_p: makes constants, parses coefficient literals,
// and enumerates the (finitely many) field elements.
struct FpContext {
    using element = Fp;
    static constexpr bool enumerable = true;

    std::uint32_t p;

    explicit FpContext(std::uint32_t modulus) : p(modulus) {
        if (!FieldSpec::is_small_prime(p)) fail_usage("modulus must be a prime < 2^31");
    }

    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
    Fp from_integer(std::int64_t n) const { return Fp::from_signed(n, p); }
    std::string tag() const { return "f" + std::to_string(p); }
    FieldSpec spec() const { return FieldSpec{FieldKind::prime, p}; }

    // Canonical residue literal: decimal, no leading zeros, in [0, p).
    Fp parse(std::string_view s) const {
        if (!detail::canonical_integer_literal(s)) fail_schema("bad F_p literal: '" + std::string(s) + "'");
        unsigned long long v = std::stoull(std::string(s));
        if (v >= p) fail_schema("F_p literal out of range: '" + std::string(s) + "'");
        return Fp(v, p);
    }

    std::vector<Fp> elements() const {
        std::vector<Fp> out;
        out.reserve(p);
        for (std::uint32_t i = 0; i < p; ++i) out.emplace_back(i, p);
        return out;
    }
};

struct RatContext {
    using element = Rat;
    static constexpr bool enumerable = false;

    Rat zero() const { return Rat(); }
    Rat one() const { return Rat(1); }
    Rat from_integer(std::int64_t n) const { return Rat(n); }
    std::string tag() const { return "q"; }
    FieldSpec spec() const { return FieldSpec{FieldKind::rational, 0}; }

    // "n", "-n", "n/d" with canonical (lowest-terms, positive-denominator) parts.
    Rat parse(std::string_view s) const {
        bool neg = false;
        if (!s.empty() && s[0] == '-') {
            neg = true;
            s.remove_prefix(1);
        }
        auto slash = s.find('/');
        std::string_view num = s.substr(0, slash);
        if (!detail::canonical_integer_literal(num)) fail_schema("bad rational literal");
        BigInt n(std::string(num));
        BigInt d = 1;
        if (slash != std::string_view::npos) {
            std::string_view den = s.substr(slash + 1);
            if (!detail::canonical_integer_literal(den)) fail_schema("bad rational literal");
            d = BigInt(std::string(den));
            if (d <= 1) fail_schema("non-canonical rational denominator");
            if (boost::multiprecision::gcd(n, d) != 1) fail_schema("rational literal not in lowest terms");
        }
        if (neg && n == 0) fail_schema("negative zero literal");
        return Rat(neg ? -n : n, d);
    }
};

} // namespace adelic
