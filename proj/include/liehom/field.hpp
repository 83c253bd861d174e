#pragma once

#include "liehom/errors.hpp"

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <variant>

namespace liehom {

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// The field Q with exact GMP rationals.
struct Rationals {
    using value_type = mpq_class;

    std::uint64_t characteristic() const { return 0; }
    std::string name() const { return "Q"; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long n) const { return value_type(static_cast<signed long>(n)); }
    value_type from_rational(const mpq_class& q) const
    {
        value_type v(q);
        v.canonicalize();
        return v;
    }
    mpq_class to_rational(const value_type& a) const { return a; }

    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const
    {
        if (is_zero(a)) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    /// acc += c * x
    void fma(value_type& acc, const value_type& c, const value_type& x) const { acc += c * x; }

    std::string to_string(const value_type& a) const { return a.get_str(); }

    friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// Z/p for a prime p < 2^31; elements are residues in [0, p).
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p))
    {
        if (p >= (1ULL << 31) || !is_prime(p))
            throw InputError("F" + std::to_string(p) + ": modulus must be a prime below 2^31");
    }

    std::uint64_t characteristic() const { return p_; }
    std::uint32_t modulus() const { return p_; }
    std::string name() const { return "F" + std::to_string(p_); }

    value_type zero() const { return 0; }
    value_type one() const { return 1 % p_; }
    value_type from_int(long long n) const
    {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<value_type>(r);
    }
    value_type from_rational(const mpq_class& q) const
    {
        mpz_class num = q.get_num() % p_;
        mpz_class den = q.get_den() % p_;
        if (den == 0)
            throw InputError("coefficient " + q.get_str() + " has denominator divisible by " + std::to_string(p_));
        if (num < 0) num += p_;
        return mul(static_cast<value_type>(num.get_ui()), inv(static_cast<value_type>(den.get_ui())));
    }
    /// Symmetric representative in (-p/2, p/2].
    mpq_class to_rational(const value_type& a) const
    {
        long long v = a;
        if (v > static_cast<long long>(p_ / 2)) v -= p_;
        return mpq_class(static_cast<signed long>(v));
    }

    bool is_zero(value_type a) const { return a == 0; }
    bool equal(value_type a, value_type b) const { return a == b; }

    value_type add(value_type a, value_type b) const
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : static_cast<value_type>(std::uint64_t(a) + p_ - b); }
    value_type mul(value_type a, value_type b) const { return static_cast<value_type>(std::uint64_t(a) * b % p_); }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const
    {
        if (a == 0) throw std::domain_error("inverse of zero");
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }
    void fma(value_type& acc, value_type c, value_type x) const { acc = add(acc, mul(c, x)); }

    std::string to_string(value_type a) const { return to_rational(a).get_str(); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

template <class F>
concept Field = std::copyable<F> && requires(const F f, typename F::value_type a, const mpq_class& q) {
    { f.zero() } -> std::convertible_to<typename F::value_type>;
    { f.one() } -> std::convertible_to<typename F::value_type>;
    { f.from_int(1LL) } -> std::convertible_to<typename F::value_type>;
    { f.from_rational(q) } -> std::convertible_to<typename F::value_type>;
    { f.to_rational(a) } -> std::convertible_to<mpq_class>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.neg(a) } -> std::convertible_to<typename F::value_type>;
    { f.inv(a) } -> std::convertible_to<typename F::value_type>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.name() } -> std::convertible_to<std::string>;
};

using FieldSpec = std::variant<Rationals, PrimeField>;

/// Accepts "Q"/"q" and "F<p>"/"f<p>".
inline FieldSpec parse_field(const std::string& text)
{
    if (text == "Q" || text == "q") return Rationals{};
    if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
        std::uint64_t p = 0;
        for (std::size_t i = 1; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9' || p > (1ULL << 40))
                throw InputError("unsupported field '" + text + "' (expected Q or F<prime>)");
            p = p * 10 + static_cast<std::uint64_t>(text[i] - '0');
        }
        return PrimeField(p);
    }
    throw InputError("unsupported field '" + text + "' (expected Q or F<prime>)");
}

inline std::string field_name(const FieldSpec& spec)
{
    return std::visit([](const auto& f) { return f.name(); }, spec);
}

inline std::uint64_t field_characteristic(const FieldSpec& spec)
{
    return std::visit([](const auto& f) { return f.characteristic(); }, spec);
}

/// Throws unless 2 is invertible.
template <Field F>
void require_odd_characteristic(const F& field, const std::string& what)
{
    if (field.characteristic() == 2)
        throw UnsupportedCharacteristic(what + " requires characteristic ≠ 2 (field " + field.name() + ")");
}

template <Field F>
typename F::value_type half(const F& field)
{
    require_odd_characteristic(field, "1/2");
    return field.inv(field.from_int(2));
}

} // namespace liehom
