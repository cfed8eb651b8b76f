#pragma once

// Decidable criteria tying solvability of x^2 + D = y^n to the class group
// of Q(sqrt(-D)), each packaged as a hypothesis check plus an empirical test:
//
//   thm21  insolvability: D = 1,2 (mod 4) squarefree, n*a^(n-1) != +-1 (mod D)
//          for every a, and gcd(n, h) = 1  =>  no solutions. The congruence is
//          required for all a: that is the reading under which the underlying
//          argument goes through, and the one implemented here.
//   cor22  divisibility: same residue condition with an odd prime exponent p;
//          if a solution exists then p | h.
//   thm23  order-n element: x^2 + D = p^n with a case condition on (x, p) and
//          a size bound on x  =>  the class group has an element of order n.
//          The claim is tested against the actual group, and failures are
//          reported as counterexamples rather than suppressed.
//   cor24  hypothesis check only: the stated conditions on a candidate
//          (x0, y0, n) are evaluated and reported, but the advertised
//          solvability implication is never asserted.
//
// All inequality checks cross-multiply and compare integers; no floating
// point is involved anywhere.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadclass/arith.hpp"
#include "quadclass/classgroup.hpp"
#include "quadclass/diophantine.hpp"

namespace quadclass {

/// Result of testing n*a^(n-1) = +-1 (mod D) over every a in [0, D).
/// holds_for_all_a means the congruence fails for all of them.
struct ResidueWitness {
    Integer D;
    Integer n;
    bool holds_for_all_a = false;
    std::optional<Integer> violating_a;  // smallest a hitting +-1, when any
};

inline ResidueWitness residue_condition(const Integer& D, const Integer& n) {
    if (D < 2) throw std::domain_error("residue_condition: D must be >= 2");
    if (n <= 1 || n % 2 == 0) throw std::domain_error("residue_condition: n must be odd and > 1");
    ResidueWitness w{D, n, true, std::nullopt};
    const Integer plus_one = Integer(1) % D;
    const Integer minus_one = ((Integer(-1) % D) + D) % D;
    const Integer n_mod = ((n % D) + D) % D;
    for (Integer a = 0; a < D; ++a) {
        const Integer r = n_mod * mod_pow(a, n - 1, D) % D;
        if (r == plus_one || r == minus_one) {
            w.holds_for_all_a = false;
            w.violating_a = a;
            break;
        }
    }
    return w;
}

enum class CriterionId { thm21, cor22, thm23, cor24, golden };

inline const char* to_string(CriterionId id) {
    switch (id) {
        case CriterionId::thm21: return "thm21";
        case CriterionId::cor22: return "cor22";
        case CriterionId::thm23: return "thm23";
        case CriterionId::cor24: return "cor24";
        case CriterionId::golden: return "golden";
    }
    return "?";
}

/// Supporting data attached to a report: class group invariants when they
/// were computed, solutions found by a bounded search, and the bounds used.
struct Evidence {
    std::optional<Integer> D;
    std::optional<Integer> h;
    std::optional<Integer> exponent;
    std::optional<Integer> y_max;
    std::vector<DiophSolution> solutions;
    std::vector<DiophSolution> expected;  // golden fixtures only
};

/// Structured verdict of one criterion evaluation.
struct CriterionReport {
    CriterionId id = CriterionId::thm21;
    std::vector<std::pair<std::string, Integer>> inputs;
    bool hypotheses_hold = false;
    std::vector<std::pair<std::string, bool>> hypothesis_detail;
    std::string claim;
    std::optional<bool> claim_holds_empirically;  // absent if hypotheses fail
                                                  // or the claim is not assertable
    Evidence evidence;
};

/// Insolvability criterion for x^2 + D = y^n (odd n > 1). When all
/// hypotheses hold, the claim is checked by bounded search up to verify_y_max;
/// an empty result is only bounded evidence, never proof.
inline CriterionReport thm21_insolvability(const Integer& D, const Integer& n,
                                           const Integer& verify_y_max) {
    if (n <= 1 || n % 2 == 0)
        throw std::domain_error("thm21_insolvability: n must be odd and > 1");
    if (verify_y_max < 2) throw std::domain_error("thm21_insolvability: verify_y_max must be >= 2");
    CriterionReport rep;
    rep.id = CriterionId::thm21;
    rep.inputs = {{"D", D}, {"n", n}, {"y_max", verify_y_max}};
    rep.claim = "x^2 + D = y^n has no solutions";

    const bool squarefree = D >= 1 && is_squarefree(D);
    const bool mod4_ok = D >= 1 && (D % 4 == 1 || D % 4 == 2);
    const bool residue_ok = D >= 2 && residue_condition(D, n).holds_for_all_a;
    bool coprime_ok = false;
    if (squarefree) {
        const ClassGroupSummary cg = class_group(D);
        rep.evidence.h = cg.h;
        rep.evidence.exponent = cg.exponent;
        coprime_ok = boost::multiprecision::gcd(n, cg.h) == 1;
    }
    rep.hypothesis_detail = {{"d_squarefree", squarefree},
                             {"d_mod4_in_1_2", mod4_ok},
                             {"residue_all_a", residue_ok},
                             {"n_coprime_h", coprime_ok}};
    rep.hypotheses_hold = squarefree && mod4_ok && residue_ok && coprime_ok;
    if (rep.hypotheses_hold) {
        rep.evidence.y_max = verify_y_max;
        rep.evidence.solutions = solve_general(D, n, verify_y_max);
        rep.claim_holds_empirically = rep.evidence.solutions.empty();
    }
    return rep;
}

/// Divisibility criterion: with the residue condition holding for all a and a
/// solution of x^2 + D = y^p found within the bound, p must divide h.
inline CriterionReport cor22_divisibility(const Integer& D, const Integer& p_exp,
                                          const Integer& verify_y_max) {
    if (p_exp == 2 || !is_prime(p_exp))
        throw std::domain_error("cor22_divisibility: p_exp must be an odd prime");
    if (verify_y_max < 2) throw std::domain_error("cor22_divisibility: verify_y_max must be >= 2");
    CriterionReport rep;
    rep.id = CriterionId::cor22;
    rep.inputs = {{"D", D}, {"p", p_exp}, {"y_max", verify_y_max}};
    rep.claim = "p divides h(K)";

    const bool squarefree = D >= 1 && is_squarefree(D);
    const bool mod4_ok = D >= 1 && (D % 4 == 1 || D % 4 == 2);
    const bool residue_ok = D >= 2 && residue_condition(D, p_exp).holds_for_all_a;
    bool solution_found = false;
    if (D >= 1) {
        rep.evidence.y_max = verify_y_max;
        rep.evidence.solutions = solve_general(D, p_exp, verify_y_max);
        solution_found = !rep.evidence.solutions.empty();
    }
    Integer h;
    if (squarefree) {
        const ClassGroupSummary cg = class_group(D);
        rep.evidence.h = cg.h;
        rep.evidence.exponent = cg.exponent;
        h = cg.h;
    }
    rep.hypothesis_detail = {{"d_squarefree", squarefree},
                             {"d_mod4_in_1_2", mod4_ok},
                             {"residue_all_a", residue_ok},
                             {"solution_found", solution_found}};
    rep.hypotheses_hold = squarefree && mod4_ok && residue_ok && solution_found;
    if (rep.hypotheses_hold) rep.claim_holds_empirically = h % p_exp == 0;
    return rep;
}

/// Hypothesis block for the order-n-element criterion on x^2 + D = p^n.
enum class Thm23Case { I, II, III, none };

inline const char* to_string(Thm23Case c) {
    switch (c) {
        case Thm23Case::I: return "I";
        case Thm23Case::II: return "II";
        case Thm23Case::III: return "III";
        case Thm23Case::none: return "none";
    }
    return "none";
}

struct Thm23Hypothesis {
    Integer x;
    Integer p;
    Integer n;
    Integer D;  // p^n - x^2, always > 0
    Thm23Case case_tag = Thm23Case::none;
    bool inequality_holds = false;
    bool D_squarefree = false;

    bool hold() const { return case_tag != Thm23Case::none && inequality_holds && D_squarefree; }
};

/// Case assignment and exact inequality evaluation:
///   I    p = 3 (mod 4), any x,  2*x^2 < p^n
///   II   p = 2, x odd,          x^2 < 2^(n-1)
///   III  p = 1 (mod 4), x even, x^2*(p-1) < p^n
inline Thm23Hypothesis thm23_hypothesis(const Integer& x, const Integer& p, const Integer& n) {
    if (!is_prime(p)) throw std::domain_error("thm23_hypothesis: p must be prime");
    if (n <= 1 || n % 2 == 0) throw std::domain_error("thm23_hypothesis: n must be odd and > 1");
    const Integer pn = boost::multiprecision::pow(p, detail::checked_exponent(n, "thm23_hypothesis"));
    const Integer x2 = x * x;
    if (pn <= x2) throw std::domain_error("thm23_hypothesis: p^n must exceed x^2");
    Thm23Hypothesis hyp{x, p, n, pn - x2, Thm23Case::none, false, false};
    const bool x_odd = x % 2 != 0;
    if (p == 2) {
        if (x_odd) {
            hyp.case_tag = Thm23Case::II;
            hyp.inequality_holds = 2 * x2 < pn;  // x^2 < 2^(n-1)
        }
    } else if (detail::mod4(p) == 3) {
        hyp.case_tag = Thm23Case::I;
        hyp.inequality_holds = 2 * x2 < pn;
    } else if (!x_odd) {
        hyp.case_tag = Thm23Case::III;
        hyp.inequality_holds = x2 * (p - 1) < pn;
    }
    hyp.D_squarefree = is_squarefree(hyp.D);
    return hyp;
}

/// Full order-n-element criterion: hypotheses plus the exact class-group
/// check. A false claim with true hypotheses is reported as-is.
inline CriterionReport thm23_check(const Integer& x, const Integer& p, const Integer& n) {
    const Thm23Hypothesis hyp = thm23_hypothesis(x, p, n);
    CriterionReport rep;
    rep.id = CriterionId::thm23;
    rep.inputs = {{"x", x}, {"p", p}, {"n", n}};
    rep.claim = "class group of Q(sqrt(-D)) has an element of order n";
    rep.evidence.D = hyp.D;
    rep.hypothesis_detail = {{"case_applies", hyp.case_tag != Thm23Case::none},
                             {"inequality_holds", hyp.inequality_holds},
                             {"d_squarefree", hyp.D_squarefree}};
    rep.hypotheses_hold = hyp.hold();
    if (hyp.D_squarefree) {
        const ClassGroupSummary cg = class_group(hyp.D);
        rep.evidence.h = cg.h;
        rep.evidence.exponent = cg.exponent;
        if (rep.hypotheses_hold) rep.claim_holds_empirically = cg.exponent % n == 0;
    }
    return rep;
}

/// Candidate-solution conditions for x0^2 + D = y0^n with y0 in the prime
/// role. Mirrors the three cases above, with two readings of case (iii): the
/// stated un-squared bound x0 < y0^n/(y0-1) and the squared variant
/// x0^2*(y0-1) < y0^n. Both appear in the detail; the stated one gates
/// hypotheses_hold. The solvability implication itself is never asserted.
inline CriterionReport cor24_hypothesis(const Integer& x0, const Integer& y0, const Integer& n) {
    if (n <= 1 || n % 2 == 0) throw std::domain_error("cor24_hypothesis: n must be odd and > 1");
    CriterionReport rep;
    rep.id = CriterionId::cor24;
    rep.inputs = {{"x0", x0}, {"y0", y0}, {"n", n}};
    rep.claim = "candidate satisfies the stated solvability conditions (implication not asserted)";

    const unsigned e = detail::checked_exponent(n, "cor24_hypothesis");
    Integer y0n;
    if (y0 >= 0) {
        y0n = boost::multiprecision::pow(y0, e);
    } else {
        y0n = -boost::multiprecision::pow(Integer(-y0), e);  // n odd
    }
    const Integer D = y0n - x0 * x0;
    const Integer x02 = x0 * x0;
    const bool y0_prime = y0 >= 2 && is_prime(y0);
    const bool x0_odd = x0 % 2 != 0;

    const bool cond_i = y0_prime && detail::mod4(y0) == 3 && 2 * x02 < y0n;
    const bool cond_ii = x0_odd && y0 == 2 && 2 * x02 < y0n;
    const bool cond_iii = !x0_odd && y0_prime && detail::mod4(y0) == 1 && x0 * (y0 - 1) < y0n;
    const bool cond_iii_sq = !x0_odd && y0_prime && detail::mod4(y0) == 1 && x02 * (y0 - 1) < y0n;
    const bool equation_holds = D >= 1;  // then x0^2 + D = y0^n by construction
    const bool d_squarefree = D >= 1 && is_squarefree(D);

    rep.evidence.D = D;
    rep.hypothesis_detail = {{"condition_i", cond_i},
                             {"condition_ii", cond_ii},
                             {"condition_iii", cond_iii},
                             {"condition_iii_squared", cond_iii_sq},
                             {"equation_holds", equation_holds},
                             {"d_squarefree", d_squarefree}};
    rep.hypotheses_hold = (cond_i || cond_ii || cond_iii) && equation_holds && d_squarefree;
    return rep;
}

}  // namespace quadclass
