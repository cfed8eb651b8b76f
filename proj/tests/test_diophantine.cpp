#include <cstdint>

#include <catch2/catch_amalgamated.hpp>

#include "quadclass/diophantine.hpp"
#include "testutil.hpp"

using quadclass::DiophSolution;
using quadclass::Integer;
using quadclass::ResidueCaseTag;

namespace {

using u128 = unsigned __int128;

// Oracle: plain double loop over (x, y), no square-root probing. Bounds are
// chosen so u128 never overflows (y_max^n <= 2^127).
std::vector<DiophSolution> naive_solve(std::uint64_t D, unsigned n, std::uint64_t y_max) {
    std::vector<DiophSolution> out;
    for (std::uint64_t y = 2; y <= y_max; ++y) {
        u128 yn = 1;
        for (unsigned i = 0; i < n; ++i) yn *= y;
        for (u128 x = 0; x * x + D <= yn; ++x)
            if (x * x + D == yn)
                out.push_back({Integer(static_cast<std::uint64_t>(x)), Integer(y), Integer(n)});
    }
    return out;
}

}  // namespace

TEST_CASE("solve_general known solutions", "[diophantine]") {
    const auto s2 = quadclass::solve_general(2, 3, 100);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0] == DiophSolution{5, 3, 3});

    const auto s19 = quadclass::solve_general(19, 3, 100);
    REQUIRE(s19.size() == 1);
    CHECK(s19[0] == DiophSolution{18, 7, 3});

    CHECK(quadclass::solve_general(1, 3, 10000).empty());

    CHECK_THROWS_AS(quadclass::solve_general(0, 3, 100), std::domain_error);
    CHECK_THROWS_AS(quadclass::solve_general(2, 1, 100), std::domain_error);
    CHECK_THROWS_AS(quadclass::solve_general(2, 3, 1), std::domain_error);
}

TEST_CASE("solve_general reports x = 0 and excludes y = 1", "[diophantine]") {
    const auto s = quadclass::solve_general(8, 3, 10);
    REQUIRE_FALSE(s.empty());
    CHECK(s[0] == DiophSolution{0, 2, 3});  // 0^2 + 8 = 2^3
    for (const auto& sol : s) CHECK(sol.y >= 2);
}

TEST_CASE("solve_all_n known solutions", "[diophantine]") {
    const auto s19 = quadclass::solve_all_n(19, 5, 100, true);
    REQUIRE(s19.size() == 2);
    CHECK(s19[0] == DiophSolution{18, 7, 3});
    CHECK(s19[1] == DiophSolution{22434, 55, 5});
    CHECK(s19[1].x * s19[1].x + 19 == Integer("503284375"));

    const auto s4 = quadclass::solve_all_n(4, 3, 100, true);
    REQUIRE(s4.size() == 2);
    CHECK(s4[0] == DiophSolution{2, 2, 3});
    CHECK(s4[1] == DiophSolution{11, 5, 3});

    CHECK(quadclass::solve_all_n(3, 9, 1000, true).empty());

    // even exponents included when odd_only is off
    const auto s3 = quadclass::solve_all_n(3, 2, 10, false);
    REQUIRE_FALSE(s3.empty());
    CHECK(s3[0] == DiophSolution{1, 2, 2});  // 1 + 3 = 4
}

TEST_CASE("every solver output satisfies the equation exactly", "[diophantine]") {
    for (long long D : {2, 4, 13, 19, 26, 53, 65}) {
        for (long long n : {2, 3, 5}) {
            for (const auto& s : quadclass::solve_general(D, n, 500)) {
                CAPTURE(D, n, s.x.str(), s.y.str());
                Integer yn = 1;
                for (Integer i = 0; i < s.n; ++i) yn *= s.y;  // independent power
                REQUIRE(s.x * s.x + D == yn);
                REQUIRE(s.x >= 0);
            }
        }
    }
}

TEST_CASE("solve_general equals the naive double loop", "[diophantine]") {
    struct Probe {
        std::uint64_t D;
        unsigned n;
        std::uint64_t y_max;
    };
    const Probe probes[] = {{2, 3, 200},  {19, 3, 200}, {26, 3, 150}, {4, 2, 120},
                            {7, 5, 80},   {13, 7, 40},  {50, 4, 100}, {1, 3, 200},
                            {44, 3, 200}, {31, 5, 60}};
    for (const auto& pr : probes) {
        CAPTURE(pr.D, pr.n, pr.y_max);
        const auto mine = quadclass::solve_general(pr.D, pr.n, pr.y_max);
        const auto oracle = naive_solve(pr.D, pr.n, pr.y_max);
        REQUIRE(mine == oracle);
    }
    auto g = testutil::rng(20);
    for (int i = 0; i < 15; ++i) {
        const std::uint64_t D = g() % 50 + 1;
        const unsigned n = 2 + static_cast<unsigned>(g() % 2);  // 2 or 3
        const std::uint64_t y_max = 50 + g() % 150;
        CAPTURE(D, n, y_max);
        REQUIRE(quadclass::solve_general(D, n, y_max) == naive_solve(D, n, y_max));
    }
}

TEST_CASE("parity and coprimality of solutions for D = 1, 2 (mod 4)", "[diophantine]") {
    for (Integer D = 1; D <= 120; ++D) {
        if (!quadclass::is_squarefree(D)) continue;
        if (D % 4 != 1 && D % 4 != 2) continue;
        for (Integer n : {3, 5, 7}) {
            for (const auto& s : quadclass::solve_all_n(D, n, 300, true)) {
                CAPTURE(D.str(), s.x.str(), s.y.str(), s.n.str());
                REQUIRE(s.y % 2 != 0);  // y odd
                REQUIRE(boost::multiprecision::gcd(s.x, s.y) == 1);
            }
        }
    }
}

TEST_CASE("solve_prime_power known solutions", "[diophantine]") {
    const auto s7 = quadclass::solve_prime_power(7, 2, 13);
    REQUIRE(s7.size() == 3);
    CHECK(s7[0] == DiophSolution{1, 2, 3});
    CHECK(s7[1] == DiophSolution{5, 2, 5});
    CHECK(s7[2] == DiophSolution{11, 2, 7});  // 128 - 7 = 121

    const auto s23 = quadclass::solve_prime_power(23, 3, 7);
    REQUIRE(s23.size() == 1);
    CHECK(s23[0] == DiophSolution{2, 3, 3});

    const auto s19 = quadclass::solve_prime_power(19, 7, 3);
    REQUIRE(s19.size() == 1);
    CHECK(s19[0] == DiophSolution{18, 7, 3});

    CHECK_THROWS_AS(quadclass::solve_prime_power(19, 6, 9), std::domain_error);
    CHECK_THROWS_AS(quadclass::solve_prime_power(19, 7, 2), std::domain_error);
}

TEST_CASE("classify_case table", "[diophantine]") {
    using quadclass::Parity;
    using quadclass::PrimeClass;

    const auto c1 = quadclass::classify_case(18, 7);
    CHECK(c1.tag == ResidueCaseTag::d_i);  // x even, p = 3 (mod 4) -> D = 3 (mod 4)
    CHECK(c1.x_parity == Parity::even);
    CHECK(c1.p_class == PrimeClass::three_mod4);
    CHECK(quadclass::residue_case_d_mod4(c1.tag) == 3);

    const auto c2 = quadclass::classify_case(1, 2);
    CHECK(c2.tag == ResidueCaseTag::d_ii);
    CHECK(quadclass::residue_case_d_mod4(c2.tag) == 3);

    const auto c3 = quadclass::classify_case(4, 5);
    CHECK(c3.tag == ResidueCaseTag::b);
    CHECK(quadclass::residue_case_d_mod4(c3.tag) == 1);

    CHECK(quadclass::classify_case(3, 5).tag == ResidueCaseTag::a_i);
    CHECK(quadclass::classify_case(2, 2).tag == ResidueCaseTag::a_ii);
    CHECK(quadclass::classify_case(1, 7).tag == ResidueCaseTag::c);

    CHECK_THROWS_AS(quadclass::classify_case(1, 6), std::domain_error);
    CHECK_THROWS_AS(quadclass::residue_case_d_mod4(ResidueCaseTag::none), std::domain_error);
}

TEST_CASE("classify_case is consistent with prime-power solutions", "[diophantine]") {
    for (Integer p : {2, 3, 5, 7, 11, 13}) {
        for (Integer D = 1; D <= 60; ++D) {
            for (const auto& s : quadclass::solve_prime_power(D, p, 9)) {
                const auto rc = quadclass::classify_case(s.x, p);
                CAPTURE(D.str(), p.str(), s.x.str(), s.n.str());
                REQUIRE(Integer(quadclass::residue_case_d_mod4(rc.tag)) == D % 4);
            }
        }
    }
}
