#include <catch2/catch_amalgamated.hpp>

#include "quadclass/validator.hpp"
#include "testutil.hpp"

using quadclass::CriterionId;
using quadclass::Integer;
using quadclass::SweepConfig;
using quadclass::ValidationRecord;
using quadclass::Verdict;

namespace {

Integer in(const ValidationRecord& r, const char* key) {
    return quadclass::detail::input_value(r, key);
}

const ValidationRecord* find_record(const std::vector<ValidationRecord>& recs,
                                    std::initializer_list<std::pair<const char*, long long>> keys) {
    for (const auto& r : recs) {
        bool ok = true;
        for (const auto& [k, v] : keys)
            if (in(r, k) != v) ok = false;
        if (ok) return &r;
    }
    return nullptr;
}

bool same_records(const std::vector<ValidationRecord>& a, const std::vector<ValidationRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].id != b[i].id || a[i].verdict != b[i].verdict || a[i].inputs != b[i].inputs)
            return false;
        if (a[i].detail.evidence.solutions != b[i].detail.evidence.solutions) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("SweepConfig validation", "[validator]") {
    SweepConfig ok;
    CHECK_NOTHROW(ok.validate());

    SweepConfig bad1;
    bad1.d_lo = 10;
    bad1.d_hi = 2;
    CHECK_THROWS_AS(bad1.validate(), std::domain_error);

    SweepConfig bad2;
    bad2.n_set = {};
    CHECK_THROWS_AS(bad2.validate(), std::domain_error);

    SweepConfig bad3;
    bad3.n_set = {4};
    CHECK_THROWS_AS(bad3.validate(), std::domain_error);

    SweepConfig bad4;
    bad4.y_max = 1;
    CHECK_THROWS_AS(bad4.validate(), std::domain_error);
}

TEST_CASE("golden fixtures reproduce the historical solution sets", "[validator]") {
    const auto recs = quadclass::golden_fixtures();
    REQUIRE(recs.size() == 6);
    for (const auto& r : recs) {
        CAPTURE(in(r, "D").str());
        REQUIRE(r.verdict != Verdict::counterexample);
        REQUIRE(r.id == CriterionId::golden);
    }
    CHECK(find_record(recs, {{"D", 1}})->verdict == Verdict::inconclusive);
    CHECK(find_record(recs, {{"D", 2}})->verdict == Verdict::agree);
    CHECK(find_record(recs, {{"D", 3}})->verdict == Verdict::inconclusive);
    CHECK(find_record(recs, {{"D", 4}})->verdict == Verdict::agree);
    CHECK(find_record(recs, {{"D", 5}})->verdict == Verdict::inconclusive);
    const auto* d19 = find_record(recs, {{"D", 19}});
    REQUIRE(d19 != nullptr);
    CHECK(d19->verdict == Verdict::agree);
    REQUIRE(d19->detail.evidence.solutions.size() == 2);
    CHECK(d19->detail.evidence.solutions[1] == quadclass::DiophSolution{22434, 55, 5});
}

TEST_CASE("thm21 sweep: bounded confirmations stay inconclusive", "[validator]") {
    SweepConfig cfg;
    cfg.d_lo = 2;
    cfg.d_hi = 50;
    cfg.n_set = {3};
    cfg.y_max = 10000;
    const auto recs = quadclass::sweep_thm21(cfg);
    REQUIRE_FALSE(recs.empty());
    for (const auto& r : recs) {
        CAPTURE(in(r, "D").str());
        REQUIRE(r.verdict != Verdict::counterexample);
        REQUIRE(r.verdict != Verdict::agree);  // search alone can never prove it
    }
    CHECK(find_record(recs, {{"D", 5}})->verdict == Verdict::inconclusive);
    CHECK(find_record(recs, {{"D", 26}})->verdict == Verdict::hypothesis_fail);
    // only squarefree D = 1, 2 (mod 4) are swept
    CHECK(find_record(recs, {{"D", 7}}) == nullptr);
    CHECK(find_record(recs, {{"D", 12}}) == nullptr);
}

TEST_CASE("thm23 sweep finds the known agreements and the counterexample", "[validator]") {
    SweepConfig cfg;
    cfg.p_max = 7;
    cfg.x_max = 10;
    cfg.n_set = {3};
    const auto recs = quadclass::sweep_thm23(cfg);

    const auto* agree = find_record(recs, {{"x", 2}, {"p", 3}, {"n", 3}});
    REQUIRE(agree != nullptr);
    CHECK(agree->verdict == Verdict::agree);
    CHECK(agree->detail.evidence.D == Integer(23));
    CHECK(agree->detail.evidence.h == Integer(3));

    const auto* cex = find_record(recs, {{"x", 1}, {"p", 2}, {"n", 3}});
    REQUIRE(cex != nullptr);
    CHECK(cex->verdict == Verdict::counterexample);
    CHECK(cex->detail.evidence.D == Integer(7));
    CHECK(cex->detail.evidence.h == Integer(1));

    const auto* a109 = find_record(recs, {{"x", 4}, {"p", 5}, {"n", 3}});
    REQUIRE(a109 != nullptr);
    CHECK(a109->verdict == Verdict::agree);
    CHECK(a109->detail.evidence.D == Integer(109));
    CHECK(a109->detail.evidence.exponent == Integer(6));

    // D = p^n never enters the sweep (not squarefree for n >= 3)
    CHECK(find_record(recs, {{"x", 0}, {"p", 2}, {"n", 3}}) == nullptr);

    // exactly one counterexample in this grid
    long long cex_count = 0;
    for (const auto& r : recs)
        if (r.verdict == Verdict::counterexample) ++cex_count;
    CHECK(cex_count == 1);
}

TEST_CASE("cor22 sweep over the default exponent", "[validator]") {
    SweepConfig cfg;
    cfg.d_lo = 2;
    cfg.d_hi = 200;
    cfg.n_set = {3};
    cfg.y_max = 10000;
    const auto recs = quadclass::sweep_cor22(cfg);
    for (const auto& r : recs) {
        CAPTURE(in(r, "D").str());
        REQUIRE(r.verdict != Verdict::counterexample);
    }
    CHECK(find_record(recs, {{"D", 26}})->verdict == Verdict::hypothesis_fail);
    CHECK(find_record(recs, {{"D", 2}})->verdict == Verdict::hypothesis_fail);
    // D = 53 has solutions, the residue condition holds, and 3 | h(-212) = 6
    const auto* d53 = find_record(recs, {{"D", 53}});
    REQUIRE(d53 != nullptr);
    CHECK(d53->verdict == Verdict::agree);
    CHECK(d53->detail.evidence.h == Integer(6));
}

TEST_CASE("verdict taxonomy is sound over all sweeps", "[validator]") {
    SweepConfig cfg;
    cfg.d_lo = 2;
    cfg.d_hi = 40;
    cfg.n_set = {3, 5};
    cfg.p_max = 5;
    cfg.x_max = 8;
    cfg.y_max = 2000;
    std::vector<ValidationRecord> all;
    for (auto recs : {quadclass::sweep_thm21(cfg), quadclass::sweep_cor22(cfg),
                      quadclass::sweep_thm23(cfg), quadclass::golden_fixtures()}) {
        all.insert(all.end(), recs.begin(), recs.end());
    }
    for (const auto& r : all) {
        const bool is_cex = r.verdict == Verdict::counterexample;
        const bool should =
            r.detail.hypotheses_hold && r.detail.claim_holds_empirically.has_value() &&
            !*r.detail.claim_holds_empirically;
        REQUIRE(is_cex == should);
        if (r.verdict == Verdict::hypothesis_fail) REQUIRE_FALSE(r.detail.hypotheses_hold);
    }
}

TEST_CASE("sweeps are deterministic and independent of worker count", "[validator]") {
    SweepConfig cfg;
    cfg.d_lo = 2;
    cfg.d_hi = 40;
    cfg.n_set = {5, 3};  // deliberately unsorted
    cfg.p_max = 5;
    cfg.x_max = 6;
    cfg.y_max = 2000;

    const auto a = quadclass::sweep_thm21(cfg);
    const auto b = quadclass::sweep_thm21(cfg);
    CHECK(same_records(a, b));

    SweepConfig par = cfg;
    par.jobs = 4;
    CHECK(same_records(a, quadclass::sweep_thm21(par)));
    CHECK(same_records(quadclass::sweep_thm23(cfg), quadclass::sweep_thm23(par)));
    CHECK(same_records(quadclass::sweep_cor22(cfg), quadclass::sweep_cor22(par)));
}
