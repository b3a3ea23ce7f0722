#include <doctest.h>

#include <set>

#include "aperylab/congruences.hpp"

using namespace aperylab;

namespace {

const CongruenceStatement& stmt(const std::string& family, const std::string& params = "") {
    for (const auto& s : registry())
        if (s.family == family && (params.empty() || s.params == params)) return s;
    FAIL("no such statement: ", family);
    return registry().front();
}

BigRational exact_diff(const CongruenceStatement& s, std::uint64_t p) {
    ExactContext ctx;
    return s.lhs_exact(ctx, p) - s.rhs_exact(ctx, p);
}

}  // namespace

TEST_CASE("registry shape") {
    const auto& reg = registry();
    CHECK(reg.size() == 115);
    const auto family_list = registry_families();
    const std::set<std::string> families(family_list.begin(), family_list.end());
    const std::set<std::string> expected = {
        "lit_full_odd", "lit_full_even", "lit_double", "lit_triple", "lit_h1_235", "lit_h12",
        "lit_half_odd", "lit_half_even", "lem_C1", "lem_C3", "lem_C2", "thm_wmezzo",
        "cor_Hp2", "cor_H2", "cor_H3", "cor_H12_H13", "thm_alts", "thm_altsb", "note_221",
        "morley6", "mc1", "mc2", "s4_sum3", "s4_inner", "mc3e21", "claim_5_864", "mc21_h2",
        "mc21_cube"};
    CHECK(families == expected);

    for (const auto& s : reg) {
        CHECK_FALSE(s.applicable(3));  // every entry rejects p = 3
        CHECK(s.exponent >= 1);
        CHECK(s.working_precision() == s.exponent + s.division_depth + 2);
    }

    const auto& mc1 = stmt("mc1");
    CHECK(mc1.exponent == 5);
    CHECK(mc1.division_depth == 0);
    CHECK(mc1.status == StatementStatus::Proven);

    std::set<std::string> drafts;
    for (const auto& s : reg)
        if (s.status == StatementStatus::Draft) drafts.insert(s.family);
    CHECK(drafts == std::set<std::string>{"s4_sum3", "s4_inner", "mc3e21", "claim_5_864",
                                          "mc21_h2", "mc21_cube"});

    // parameter grids
    std::size_t doubles = 0, triples = 0, c1 = 0, c2 = 0, pairs = 0;
    for (const auto& s : reg) {
        if (s.family == "lit_double") ++doubles;
        if (s.family == "lit_triple") ++triples;
        if (s.family == "lem_C1") ++c1;
        if (s.family == "lem_C2") ++c2;
        if (s.family == "note_221") ++pairs;
    }
    CHECK(doubles == 16);
    CHECK(triples == 22);
    CHECK(c1 == 16);
    CHECK(c2 == 12);
    CHECK(pairs == 4);
}

TEST_CASE("anchor evaluations at p = 7") {
    // the exact differences below were recomputed by hand / independent oracle
    CHECK(exact_diff(stmt("mc1"), 7) == BigRational(16807, 1920));  // 7^5/1920
    CHECK(padic_valuation(exact_diff(stmt("mc2"), 7), 7) == Valuation::of(4));
    CHECK(exact_diff(stmt("mc2"), 7) == BigRational(-31213, 28800));  // -13*7^4/28800
    CHECK(padic_valuation(exact_diff(stmt("morley6"), 7), 7) == Valuation::of(6));
    CHECK(exact_diff(stmt("morley6"), 7) == BigRational(117649, 3072));  // 7^6/3072
    CHECK(padic_valuation(exact_diff(stmt("mc21_h2"), 7), 7) == Valuation::of(3));
    CHECK(exact_diff(stmt("mc21_h2"), 7) == BigRational(6517, 25920));  // 19*7^3/25920
    CHECK(padic_valuation(exact_diff(stmt("mc21_cube"), 7), 7) == Valuation::of(3));
    CHECK(exact_diff(stmt("mc21_cube"), 7) == BigRational(537481, 432000));  // 1567*7^3/432000
    CHECK(padic_valuation(exact_diff(stmt("claim_5_864"), 7), 7) == Valuation::of(1));
    CHECK(exact_diff(stmt("claim_5_864"), 7) == BigRational(77, 51840));
    CHECK(exact_diff(stmt("thm_alts"), 7) == BigRational(-16807, 225));  // -7^5/225
    CHECK(exact_diff(stmt("thm_altsb"), 7) == BigRational(117649, 7680));  // 7^6/7680
    CHECK(exact_diff(stmt("s4_inner"), 7) == BigRational(-343, 1920));  // -7^3/1920
    CHECK(padic_valuation(exact_diff(stmt("lit_h12"), 7), 7) == Valuation::of(3));
    CHECK(padic_valuation(exact_diff(stmt("lit_h1_235"), 7), 7) == Valuation::of(5));
    CHECK(padic_valuation(exact_diff(stmt("thm_wmezzo"), 7), 7) == Valuation::of(5));
    CHECK(padic_valuation(exact_diff(stmt("s4_sum3"), 7), 7) == Valuation::of(3));
    CHECK(padic_valuation(exact_diff(stmt("mc3e21"), 7), 7) == Valuation::of(3));
}

TEST_CASE("evaluate_statement outcomes") {
    const auto& mc1 = stmt("mc1");
    const auto na = evaluate_statement(mc1, 5, Engine::Exact);
    CHECK(na.outcome == Outcome::NotApplicable);

    const auto ex = evaluate_statement(mc1, 7, Engine::Exact);
    CHECK(ex.outcome == Outcome::Pass);
    CHECK(ex.achieved.kind == AchievedValuation::Kind::Exact);
    CHECK(ex.achieved.value == 5);
    CHECK(ex.required_exponent == 5);

    const auto pa = evaluate_statement(mc1, 7, Engine::Padic);
    CHECK(pa.outcome == Outcome::Pass);
    CHECK(pa.residue_lhs == ex.residue_lhs);
    CHECK(pa.residue_rhs == ex.residue_rhs);

    const auto both = evaluate_statement(mc1, 7, Engine::Both);
    CHECK(both.outcome == Outcome::Pass);
    CHECK(both.engine == "both");
    CHECK(both.achieved.value == 5);

    for (std::uint64_t p : {11ull, 13ull, 31ull}) {
        const auto a = evaluate_statement(stmt("thm_alts"), p, Engine::Exact);
        const auto b = evaluate_statement(stmt("thm_alts"), p, Engine::Padic);
        CHECK(a.outcome == Outcome::Pass);
        CHECK(b.outcome == Outcome::Pass);
        CHECK(a.residue_lhs == b.residue_lhs);
        CHECK(a.residue_rhs == b.residue_rhs);
    }
}

TEST_CASE("verify_range aggregates deterministically") {
    SweepOptions opt;
    opt.engine = Engine::Exact;
    opt.prime_lo = 7;
    opt.prime_hi = 31;
    opt.workers = 1;

    const auto empty = verify_range({}, opt);
    CHECK(empty.rows.empty());
    CHECK(empty.summary.empty());

    const auto sel = select_statements({"mc1", "lit_half_odd"});
    const auto res = verify_range(sel, opt);
    // primes 7..31: 8 of them; lit_half_odd r=3 needs p>7, r=5 needs p>9
    CHECK(res.rows.size() == 8 + 7 + 7);
    for (const auto& row : res.rows) CHECK(row.outcome == Outcome::Pass);
    long long na = 0;
    for (const auto& [family, entry] : res.summary)
        if (family == "lit_half_odd") na = entry.na;
    CHECK(na == 2);
    // ordering by (family, params, prime)
    for (std::size_t i = 1; i < res.rows.size(); ++i) {
        const auto& a = res.rows[i - 1];
        const auto& b = res.rows[i];
        CHECK(std::tie(a.family, a.params, a.prime) < std::tie(b.family, b.params, b.prime));
    }
}

TEST_CASE("selection errors") {
    CHECK_THROWS_AS(select_statements({"nosuch"}), std::invalid_argument);
    CHECK(select_by_status(StatementStatus::Draft).size() == 6);
    CHECK(select_all().size() == registry().size());
    CHECK(registry_has_family("mc21_cube"));
    CHECK_FALSE(registry_has_family("mc3"));
}

TEST_CASE("sharpness scan pins exact valuations") {
    const auto mc1_points = sharpness_scan("mc1", 7, 7);
    REQUIRE(mc1_points.size() == 1);
    CHECK(mc1_points[0].prime == 7);
    CHECK(mc1_points[0].achieved.value == 5);

    const auto mc2_points = sharpness_scan("mc2", 7, 7);
    REQUIRE(mc2_points.size() == 1);
    CHECK(mc2_points[0].achieved.value == 4);

    const auto cube_points = sharpness_scan("mc21_cube", 7, 7);
    REQUIRE(cube_points.size() == 1);
    CHECK(cube_points[0].achieved.value == 3);

    CHECK_THROWS_AS(sharpness_scan("nosuch", 7, 31), std::invalid_argument);
}

TEST_CASE("engine exceptions become error cells, never crashes") {
    // A synthetic statement whose p-adic difference cancels below the
    // required exponent: the evaluators agree to relative precision but the
    // declared exponent is deeper than the working precision can certify.
    CongruenceStatement s;
    s.family = "synthetic";
    s.description = "x - x == 0 to an uncertifiable depth";
    s.exponent = 9;          // working precision e + d + 2 = 11 ...
    s.division_depth = 0;
    s.requires_p_above = 3;
    s.lhs_exact = [](const ExactContext&, std::uint64_t) { return BigRational(1, 3); };
    s.rhs_exact = [](const ExactContext&, std::uint64_t) { return BigRational(1, 3); };
    // ... but the padic sides are built at a shallower precision by hand
    s.lhs_padic = [](const PadicContext&, std::uint64_t p) {
        return PadicApprox::from_rational(BigRational(1, 3), p, 2);
    };
    s.rhs_padic = [](const PadicContext&, std::uint64_t p) {
        return PadicApprox::from_rational(BigRational(1, 3), p, 2);
    };

    const auto bad = evaluate_statement(s, 7, Engine::Padic);
    CHECK(bad.outcome == Outcome::Error);
    CHECK(bad.error.find("precision") != std::string::npos);

    const auto good = evaluate_statement(s, 7, Engine::Exact);
    CHECK(good.outcome == Outcome::Pass);
    CHECK(good.achieved.kind == AchievedValuation::Kind::Infinite);
    CHECK(good.achieved.to_string() == "ge_precision");

    SweepOptions opt;
    opt.engine = Engine::Padic;
    opt.prime_lo = 7;
    opt.prime_hi = 13;
    opt.workers = 2;
    const auto res = verify_range({&s}, opt);
    REQUIRE(res.rows.size() == 3);
    for (const auto& row : res.rows) CHECK(row.outcome == Outcome::Error);
    CHECK(res.summary.front().second.fail == 3);
}

TEST_CASE("engine names round-trip") {
    CHECK(parse_engine("exact") == Engine::Exact);
    CHECK(parse_engine("padic") == Engine::Padic);
    CHECK(parse_engine("both") == Engine::Both);
    CHECK_THROWS_AS(parse_engine("quantum"), std::invalid_argument);
    CHECK(engine_name(Engine::Padic) == "padic");
}
