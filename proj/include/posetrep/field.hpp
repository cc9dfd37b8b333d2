#pragma once

// Exact scalar fields: prime fields GF(p) and the rationals.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "posetrep/errors.hpp"

namespace posetrep {

struct FieldSpec {
    enum class Kind { Prime, Rationals };

    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;  // only meaningful for Kind::Prime

    static FieldSpec prime(std::uint32_t p) { return {Kind::Prime, p}; }
    static FieldSpec rationals() { return {Kind::Rationals, 0}; }

    bool is_prime() const { return kind == Kind::Prime; }
    std::string name() const { return is_prime() ? "GF(" + std::to_string(p) + ")" : "Q"; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

constexpr bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p >= (1u << 31) || !is_prime_number(p))
            throw Error(ErrorCode::InvalidInput, "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    }

    std::uint32_t characteristic() const { return p_; }
    FieldSpec spec() const { return FieldSpec::prime(p_); }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }

    Element from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Element>(r);
    }

    Element add(Element a, Element b) const {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Element>(s >= p_ ? s - p_ : s);
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b); }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const { return static_cast<Element>(std::uint64_t{a} * b % p_); }

    Element pow(Element a, std::uint64_t e) const {
        Element r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Element inv(Element a) const {
        if (a == 0) throw Error(ErrorCode::InvalidInput, "division by zero in " + spec().name());
        return pow(a, p_ - 2);
    }

    /// Smallest generator of the multiplicative group.
    Element primitive_root() const {
        if (p_ == 2) return 1;
        std::uint32_t phi = p_ - 1;
        for (Element g = 2; g < p_; ++g) {
            bool ok = true;
            std::uint32_t n = phi;
            for (std::uint32_t q = 2; q * q <= n && ok; ++q) {
                if (n % q) continue;
                if (pow(g, phi / q) == 1) ok = false;
                while (n % q == 0) n /= q;
            }
            if (ok && n > 1 && pow(g, phi / n) == 1) ok = false;
            if (ok) return g;
        }
        return 1;
    }

    std::string to_string(Element a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField& x, const PrimeField& y) { return x.p_ == y.p_; }

private:
    std::uint32_t p_;
};

class RationalField {
public:
    using Element = boost::multiprecision::cpp_rational;

    FieldSpec spec() const { return FieldSpec::rationals(); }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    bool is_zero(const Element& a) const { return a == 0; }
    Element from_int(std::int64_t v) const { return Element(v); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const {
        if (a == 0) throw Error(ErrorCode::InvalidInput, "division by zero in Q");
        return Element(1) / a;
    }

    /// "a" or "a/b" in lowest terms.
    std::string to_string(const Element& a) const {
        auto num = boost::multiprecision::numerator(a);
        auto den = boost::multiprecision::denominator(a);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    /// Accepts "a", "-a", "a/b".
    Element parse(const std::string& text) const {
        using boost::multiprecision::cpp_int;
        try {
            auto slash = text.find('/');
            if (slash == std::string::npos) return Element(cpp_int(text));
            cpp_int num(text.substr(0, slash));
            cpp_int den(text.substr(slash + 1));
            if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + text + "'");
            if (den < 0) num = -num, den = -den;
            return Element(num, den);
        } catch (const std::exception& e) {
            if (dynamic_cast<const Error*>(&e)) throw;
            throw Error(ErrorCode::InvalidInput, "cannot parse rational '" + text + "'");
        }
    }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept ExactField = requires(const F& f, const typename F::Element& a) {
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.add(a, a) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.spec() } -> std::same_as<FieldSpec>;
};

}  // namespace posetrep
