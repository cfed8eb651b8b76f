#pragma once

// Bounded exact solvers for x^2 + D = y^n and its prime-power special case
// x^2 + D = p^n, plus the residue-case classifier that reads D mod 4 off the
// parity of x and the congruence class of p.
//
// The search runs over y (y^n grows fastest, so that loop is shortest) and
// tests y^n - D for perfect squareness. Solutions are canonical with x >= 0;
// the degenerate y = 1 is excluded, x = 0 is reported when y^n = D.

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "quadclass/arith.hpp"

namespace quadclass {

/// One solution of x^2 + D = y^n (D supplied by context).
struct DiophSolution {
    Integer x;  // >= 0
    Integer y;  // >= 2
    Integer n;  // >= 2

    friend bool operator==(const DiophSolution&, const DiophSolution&) = default;
    friend bool operator<(const DiophSolution& s, const DiophSolution& t) {
        return std::tie(s.n, s.y, s.x) < std::tie(t.n, t.y, t.x);
    }
};

namespace detail {

inline unsigned checked_exponent(const Integer& n, const char* who) {
    if (n > std::numeric_limits<unsigned>::max())
        throw std::domain_error(std::string(who) + ": exponent too large");
    return n.convert_to<unsigned>();
}

}  // namespace detail

/// All solutions of x^2 + D = y^n with 2 <= y <= y_max, x >= 0, sorted by y.
inline std::vector<DiophSolution> solve_general(const Integer& D, const Integer& n,
                                                const Integer& y_max) {
    if (D < 1) throw std::domain_error("solve_general: D must be >= 1");
    if (n < 2) throw std::domain_error("solve_general: n must be >= 2");
    if (y_max < 2) throw std::domain_error("solve_general: y_max must be >= 2");
    const unsigned e = detail::checked_exponent(n, "solve_general");
    std::vector<DiophSolution> out;
    for (Integer y = 2; y <= y_max; ++y) {
        const Integer t = boost::multiprecision::pow(y, e) - D;
        if (t < 0) continue;
        if (auto x = is_perfect_square(t)) out.push_back({*x, y, n});
    }
    return out;
}

/// Union of solve_general over n in [2, n_max] (or odd n in [3, n_max] when
/// odd_only), sorted by (n, y).
inline std::vector<DiophSolution> solve_all_n(const Integer& D, const Integer& n_max,
                                              const Integer& y_max, bool odd_only) {
    if (n_max < (odd_only ? 3 : 2))
        throw std::domain_error("solve_all_n: n_max below the smallest exponent");
    std::vector<DiophSolution> out;
    for (Integer n = odd_only ? 3 : 2; n <= n_max; ++n) {
        if (odd_only && n % 2 == 0) continue;
        auto part = solve_general(D, n, y_max);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Solutions of x^2 + D = p^n for prime p over odd n in [3, n_max], sorted by n.
inline std::vector<DiophSolution> solve_prime_power(const Integer& D, const Integer& p,
                                                    const Integer& n_max) {
    if (D < 1) throw std::domain_error("solve_prime_power: D must be >= 1");
    if (!is_prime(p)) throw std::domain_error("solve_prime_power: p must be prime");
    if (n_max < 3) throw std::domain_error("solve_prime_power: n_max must be >= 3");
    std::vector<DiophSolution> out;
    for (Integer n = 3; n <= n_max; n += 2) {
        const Integer t = boost::multiprecision::pow(p, detail::checked_exponent(n, "solve_prime_power")) - D;
        if (t < 0) continue;
        if (auto x = is_perfect_square(t)) out.push_back({*x, p, n});
    }
    return out;
}

/// Residue cases for x^2 + D = p^n with odd n: the pair (parity of x, class
/// of p) pins down D mod 4.
enum class ResidueCaseTag { a_i, a_ii, b, c, d_i, d_ii, none };
enum class Parity { even, odd };
enum class PrimeClass { one_mod4, three_mod4, two };

struct ResidueCase {
    ResidueCaseTag tag = ResidueCaseTag::none;
    Parity x_parity = Parity::even;
    PrimeClass p_class = PrimeClass::two;
};

/// D mod 4 implied by the case tag.
inline int residue_case_d_mod4(ResidueCaseTag tag) {
    switch (tag) {
        case ResidueCaseTag::a_i:
        case ResidueCaseTag::a_ii: return 0;
        case ResidueCaseTag::b: return 1;
        case ResidueCaseTag::c: return 2;
        case ResidueCaseTag::d_i:
        case ResidueCaseTag::d_ii: return 3;
        case ResidueCaseTag::none: break;
    }
    throw std::domain_error("residue_case_d_mod4: no case");
}

inline ResidueCase classify_case(const Integer& x, const Integer& p) {
    if (!is_prime(p)) throw std::domain_error("classify_case: p must be prime");
    ResidueCase rc;
    rc.x_parity = x % 2 == 0 ? Parity::even : Parity::odd;
    rc.p_class = p == 2                ? PrimeClass::two
                 : detail::mod4(p) == 1 ? PrimeClass::one_mod4
                                        : PrimeClass::three_mod4;
    const bool odd = rc.x_parity == Parity::odd;
    switch (rc.p_class) {
        case PrimeClass::one_mod4: rc.tag = odd ? ResidueCaseTag::a_i : ResidueCaseTag::b; break;
        case PrimeClass::two: rc.tag = odd ? ResidueCaseTag::d_ii : ResidueCaseTag::a_ii; break;
        case PrimeClass::three_mod4: rc.tag = odd ? ResidueCaseTag::c : ResidueCaseTag::d_i; break;
    }
    return rc;
}

inline const char* to_string(ResidueCaseTag tag) {
    switch (tag) {
        case ResidueCaseTag::a_i: return "a_i";
        case ResidueCaseTag::a_ii: return "a_ii";
        case ResidueCaseTag::b: return "b";
        case ResidueCaseTag::c: return "c";
        case ResidueCaseTag::d_i: return "d_i";
        case ResidueCaseTag::d_ii: return "d_ii";
        case ResidueCaseTag::none: return "none";
    }
    return "none";
}

}  // namespace quadclass
