#pragma once

// Exact scalar types and field descriptors.
//
// Two coefficient fields are supported: the rationals (GMP-backed, always
// reduced) and prime fields F_p.  An Fp element carries its modulus, so
// values from different prime fields never mix silently.  Values built from
// plain integer literals (Eigen creates Scalar(0) and Scalar(1) internally)
// stay unbound until they meet a bound operand.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace srlab {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

class Fp {
public:
    static constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

    Fp() = default;
    Fp(int v) : Fp(static_cast<long long>(v)) {}
    Fp(long v) : Fp(static_cast<long long>(v)) {}
    Fp(long long v) : value_(static_cast<std::uint64_t>(v)), prime_(0) {}
    Fp(long long v, std::uint64_t prime) : prime_(prime) { value_ = reduce_signed(v, prime); }

    static Fp from_residue(std::uint64_t r, std::uint64_t prime) {
        Fp out;
        out.value_ = r % prime;
        out.prime_ = prime;
        return out;
    }

    std::uint64_t prime() const { return prime_; }
    bool bound() const { return prime_ != 0; }

    // Residue in [0, p).  Unbound literals report their signed value reduced
    // modulo `prime`.
    std::uint64_t residue(std::uint64_t prime) const {
        if (prime_ != 0) {
            check_same(prime_, prime);
            return value_;
        }
        return reduce_signed(static_cast<long long>(value_), prime);
    }
    std::uint64_t residue() const { return value_; }

    bool is_zero() const { return value_ == 0; }

    Fp inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in F_p");
        if (prime_ == 0) {
            auto v = static_cast<long long>(value_);
            if (v == 1 || v == -1) return *this;
            throw std::domain_error("inverse of an unbound F_p literal");
        }
        // extended Euclid on unsigned 128-bit intermediates
        __int128 t = 0, new_t = 1;
        __int128 r = prime_, new_r = value_;
        while (new_r != 0) {
            __int128 q = r / new_r;
            __int128 tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += prime_;
        return from_residue(static_cast<std::uint64_t>(t), prime_);
    }

    Fp operator-() const {
        if (prime_ == 0) return Fp(-static_cast<long long>(value_));
        return from_residue(value_ == 0 ? 0 : prime_ - value_, prime_);
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        const std::uint64_t p = common_prime(a, b);
        if (p == 0) return Fp(static_cast<long long>(a.value_) + static_cast<long long>(b.value_));
        std::uint64_t x = a.residue(p), y = b.residue(p);
        std::uint64_t s = x + y;
        if (s >= p) s -= p;
        return from_residue(s, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        const std::uint64_t p = common_prime(a, b);
        if (p == 0) return Fp(static_cast<long long>(a.value_) - static_cast<long long>(b.value_));
        std::uint64_t x = a.residue(p), y = b.residue(p);
        return from_residue(x >= y ? x - y : x + (p - y), p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        const std::uint64_t p = common_prime(a, b);
        if (p == 0) return Fp(static_cast<long long>(a.value_) * static_cast<long long>(b.value_));
        return from_residue(mul_mod(a.residue(p), b.residue(p), p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) {
        const std::uint64_t p = common_prime(a, b);
        if (p == 0) return a * b.inverse();
        Fp bb = b.bound() ? b : from_residue(b.residue(p), p);
        return a * bb.inverse();
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        const std::uint64_t p = common_prime(a, b);
        if (p == 0) return a.value_ == b.value_;
        return a.residue(p) == b.residue(p);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string to_string() const {
        return prime_ ? std::to_string(value_) : std::to_string(static_cast<long long>(value_));
    }

    static std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
        const unsigned __int128 prod = static_cast<unsigned __int128>(x) * y;
        if (p == kMersenne61) {
            std::uint64_t lo = static_cast<std::uint64_t>(prod) & kMersenne61;
            std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
            std::uint64_t s = lo + hi;
            if (s >= kMersenne61) s -= kMersenne61;
            return s;
        }
        return static_cast<std::uint64_t>(prod % p);
    }

private:
    static std::uint64_t reduce_signed(long long v, std::uint64_t p) {
        if (v >= 0) return static_cast<std::uint64_t>(v) % p;
        const std::uint64_t m = (~static_cast<std::uint64_t>(v) + 1) % p;
        return m == 0 ? 0 : p - m;
    }
    static void check_same(std::uint64_t p, std::uint64_t q) {
        if (p != q) throw std::invalid_argument("mixing elements of different prime fields");
    }
    static std::uint64_t common_prime(const Fp& a, const Fp& b) {
        if (a.prime_ && b.prime_) {
            check_same(a.prime_, b.prime_);
            return a.prime_;
        }
        return a.prime_ ? a.prime_ : b.prime_;
    }

    std::uint64_t value_ = 0;
    std::uint64_t prime_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.to_string(); }

/// The field of rational numbers.
struct RationalField {
    using Scalar = Rational;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long long v) const { return Scalar(v); }
    Scalar from_integer(const Integer& v) const { return Scalar(v); }

    // Integers drawn uniformly from [-2^31, 2^31].
    template <class Rng>
    Scalar random(Rng& rng) const {
        std::uniform_int_distribution<long long> dist(-(1LL << 31), 1LL << 31);
        return Scalar(dist(rng));
    }

    std::string name() const { return "q"; }
    static constexpr bool is_exact_infinite = true;
};

/// The prime field F_p.  Defaults to p = 2^61 - 1.
struct PrimeField {
    using Scalar = Fp;

    std::uint64_t prime = Fp::kMersenne61;

    Scalar zero() const { return Fp::from_residue(0, prime); }
    Scalar one() const { return Fp::from_residue(1, prime); }
    Scalar from_int(long long v) const { return Fp(v, prime); }
    Scalar from_integer(const Integer& v) const {
        Integer r = v % Integer(prime);
        if (r < 0) r += prime;
        return Fp::from_residue(r.convert_to<std::uint64_t>(), prime);
    }

    template <class Rng>
    Scalar random(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> dist(0, prime - 1);
        return Fp::from_residue(dist(rng), prime);
    }

    std::string name() const { return "fp:" + std::to_string(prime); }
    static constexpr bool is_exact_infinite = false;
};

using FieldSpec = std::variant<RationalField, PrimeField>;

/// Parses "q" or "fp:<prime>".  The prime is checked with Miller-Rabin.
FieldSpec parse_field(const std::string& text);
std::string field_name(const FieldSpec& field);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const Fp& x) { return x.to_string(); }

/// splitmix64 finalizer; derives independent RNG streams from (seed, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace srlab

namespace Eigen {

template <>
struct NumTraits<srlab::Fp> : GenericNumTraits<srlab::Fp> {
    using Real = srlab::Fp;
    using NonInteger = srlab::Fp;
    using Literal = srlab::Fp;
    using Nested = srlab::Fp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline srlab::Fp epsilon() { return srlab::Fp(0); }
    static inline srlab::Fp dummy_precision() { return srlab::Fp(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
