#pragma once

// Exact number-theoretic primitives on arbitrary-precision integers.
// Everything here is deterministic: primality uses a fixed strong-pseudoprime
// witness set, factoring uses trial division plus Pollard rho with a fixed
// parameter schedule, so repeated runs always agree.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quadclass {

using Integer = boost::multiprecision::cpp_int;

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Complete prime factorization of `value`, primes strictly increasing.
struct Factorization {
    Integer value;
    std::vector<PrimePower> factors;
};

namespace detail {

// g = gcd(a, b) with g = a*x + b*y.
inline Integer ext_gcd(Integer a, Integer b, Integer& x, Integer& y) {
    Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Integer q = a / b;
        Integer t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    x = x0;
    y = y0;
    return a;
}

inline int mod4(const Integer& v) {
    return static_cast<int>(((v % 4) + 4) % 4);
}

inline int mod8(const Integer& v) {
    return static_cast<int>(((v % 8) + 8) % 8);
}

}  // namespace detail

/// base^exp mod modulus, result in [0, modulus). exp must be >= 0, modulus >= 1.
inline Integer mod_pow(const Integer& base, const Integer& exp, const Integer& modulus) {
    if (modulus < 1) throw std::domain_error("mod_pow: modulus must be >= 1");
    if (exp < 0) throw std::domain_error("mod_pow: exponent must be >= 0");
    Integer b = base % modulus;
    if (b < 0) b += modulus;
    return boost::multiprecision::powm(b, exp, modulus);
}

/// Floor of the square root: r with r^2 <= v < (r+1)^2. Newton iteration
/// from an over-estimate, then floor correction; exact at any magnitude.
inline Integer isqrt(const Integer& v) {
    if (v < 0) throw std::domain_error("isqrt: negative argument");
    if (v < 2) return v;
    const unsigned bits = boost::multiprecision::msb(v);
    Integer x = Integer(1) << (bits / 2 + 1);  // x > sqrt(v)
    for (;;) {
        Integer y = (x + v / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    while (x * x > v) --x;
    while ((x + 1) * (x + 1) <= v) ++x;
    return x;
}

namespace detail {

// Cheap non-residue filters: a square must be a square residue mod 64, 63, 65, 11.
inline bool square_residue_ok(const Integer& v) {
    static const auto tables = [] {
        struct T {
            std::array<bool, 64> m64{};
            std::array<bool, 63> m63{};
            std::array<bool, 65> m65{};
            std::array<bool, 11> m11{};
        } t;
        for (unsigned i = 0; i < 64; ++i) t.m64[(i * i) % 64] = true;
        for (unsigned i = 0; i < 63; ++i) t.m63[(i * i) % 63] = true;
        for (unsigned i = 0; i < 65; ++i) t.m65[(i * i) % 65] = true;
        for (unsigned i = 0; i < 11; ++i) t.m11[(i * i) % 11] = true;
        return t;
    }();
    if (!tables.m64[static_cast<unsigned>(v & 63)]) return false;
    if (!tables.m63[static_cast<unsigned>(v % 63)]) return false;
    if (!tables.m65[static_cast<unsigned>(v % 65)]) return false;
    return tables.m11[static_cast<unsigned>(v % 11)];
}

}  // namespace detail

/// The non-negative root when v is a perfect square, nullopt otherwise.
inline std::optional<Integer> is_perfect_square(const Integer& v) {
    if (v < 0) return std::nullopt;
    if (!detail::square_residue_ok(v)) return std::nullopt;
    Integer r = isqrt(v);
    if (r * r == v) return r;
    return std::nullopt;
}

/// Deterministic primality test. Strong-pseudoprime test with the first twelve
/// primes as witnesses, which is proven correct for v < 3.3 * 10^24; all
/// quantities in this project stay far below that bound.
inline bool is_prime(const Integer& v) {
    static constexpr std::array<unsigned, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (v < 2) return false;
    for (unsigned w : witnesses) {
        if (v == w) return true;
        if (v % w == 0) return false;
    }
    Integer d = v - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (unsigned w : witnesses) {
        Integer x = boost::multiprecision::powm(Integer(w), d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = (x * x) % v;
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

// Pollard rho (Floyd cycle) with the deterministic schedule c = 1, 2, ...
// Expects n odd, composite, with no prime factor below the trial bound.
inline Integer rho_split(const Integer& n) {
    for (Integer c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = boost::multiprecision::gcd(boost::multiprecision::abs(x - y), n);
        }
        if (d != n) return d;
    }
}

inline void factor_into(Integer n, std::map<Integer, unsigned>& acc) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++acc[n];
        return;
    }
    if (auto root = is_perfect_square(n)) {
        std::map<Integer, unsigned> sub;
        factor_into(*root, sub);
        for (auto& [p, e] : sub) acc[p] += 2 * e;
        return;
    }
    Integer d = rho_split(n);
    factor_into(d, acc);
    factor_into(n / d, acc);
}

}  // namespace detail

/// Complete factorization of v >= 1. Trial division to 10^6, then rho.
inline Factorization factorize(const Integer& v) {
    if (v < 1) throw std::domain_error("factorize: argument must be >= 1");
    std::map<Integer, unsigned> acc;
    Integer n = v;
    auto strip = [&](unsigned p) {
        while (n % p == 0) {
            n /= p;
            ++acc[Integer(p)];
        }
    };
    strip(2);
    strip(3);
    for (unsigned d = 5; d <= 1000000 && Integer(d) * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    detail::factor_into(n, acc);
    Factorization out;
    out.value = v;
    out.factors.reserve(acc.size());
    for (auto& [p, e] : acc) out.factors.push_back({p, e});
    return out;
}

/// True iff no square > 1 divides v. v must be >= 1.
inline bool is_squarefree(const Integer& v) {
    if (v < 1) throw std::domain_error("is_squarefree: argument must be >= 1");
    for (const auto& pp : factorize(v).factors)
        if (pp.exponent > 1) return false;
    return true;
}

/// Kronecker symbol (a|n) with the standard conventions; coincides with the
/// Legendre symbol for odd prime n.
inline int kronecker(Integer a, Integer n) {
    using boost::multiprecision::abs;
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int k = 1;
    unsigned twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos % 2 == 1) {
        const int m = detail::mod8(a);
        if (m == 3 || m == 5) k = -k;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    for (;;) {
        // invariant: n odd, n > 0
        if (a == 0) return n > 1 ? 0 : k;
        twos = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++twos;
        }
        if (twos % 2 == 1) {
            const int m = detail::mod8(n);
            if (m == 3 || m == 5) k = -k;
        }
        if (detail::mod4(a) == 3 && detail::mod4(n) == 3) k = -k;  // reciprocity
        Integer r = abs(a);
        a = n % r;
        n = r;
    }
}

}  // namespace quadclass
