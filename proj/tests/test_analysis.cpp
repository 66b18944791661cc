#include <doctest.h>

#include <cmath>

#include "pafold/analysis.hpp"

using namespace pafold;

TEST_CASE("summarize a single trivial trial") {
    SchemePreset preset = custom_preset(GuessProbability(0.5), 1.0);
    KeyRequest req(1, 0);
    TrialResult t;
    t.alice_key.append(true);
    t.bob_key.append(true);
    t.eve_key.append(true); // Eve correct on the single final bit
    t.sift = SiftStats{1, 1, 0};

    SimulationReport rep = summarize({&t, 1}, preset, req, 9);
    CHECK(rep.total_final_bits == 1);
    CHECK(rep.eve_correct_final_bits == 1);
    CHECK(rep.empirical_eve_rate == 1.0);
    CHECK(rep.bound_rate == 0.5);
    CHECK(rep.slowdown == 1.0);
    CHECK(rep.seed == 9);

    CHECK_THROWS_AS(summarize({}, preset, req, 0), std::invalid_argument);
}

TEST_CASE("slowdown values for the realized schemes") {
    SchemePreset kljn = kljn_preset();
    KeyRequest req_kljn(10, 2);
    TrialResult t = run_trial(kljn, req_kljn, 1);
    SimulationReport rep = summarize({&t, 1}, kljn, req_kljn, 1);
    CHECK(rep.slowdown == 4.0);
    CHECK(rep.raw_per_final == doctest::Approx(4.0 / 0.9998));

    SchemePreset ufl = ufl_preset();
    KeyRequest req_ufl(10, 3);
    TrialResult u = run_trial(ufl, req_ufl, 1);
    CHECK(summarize({&u, 1}, ufl, req_ufl, 1).slowdown == 8.0);
}

TEST_CASE("summarize aggregates across trials") {
    SchemePreset preset = kljn_preset();
    KeyRequest req(100, 2);
    TrialResult trials[3] = {
        run_trial(preset, req, 1),
        run_trial(preset, req, 2),
        run_trial(preset, req, 3),
    };
    SimulationReport rep = summarize({trials, 3}, preset, req, 1);
    CHECK(rep.trials == 3);
    CHECK(rep.total_final_bits == 300);
    CHECK(rep.empirical_eve_rate ==
          static_cast<double>(rep.eve_correct_final_bits) / 300.0);
    double sigma =
        std::sqrt(rep.bound_rate * (1 - rep.bound_rate) / 300.0);
    CHECK(rep.std_devs ==
          doctest::Approx((rep.empirical_eve_rate - rep.bound_rate) / sigma));
}

TEST_CASE("report json has fixed key order and no timestamps") {
    SchemePreset preset = kljn_preset();
    KeyRequest req(10, 2);
    TrialResult t = run_trial(preset, req, 4);
    SimulationReport rep = summarize({&t, 1}, preset, req, 4);
    std::string json = report_json(rep);
    CHECK(json == report_json(rep)); // stable serialization
    CHECK(json.find("\"scheme\"") < json.find("\"p\""));
    CHECK(json.find("\"empirical_eve_rate\"") < json.find("\"bound_rate\""));
    CHECK(json.find("\"seed\": 4") != std::string::npos);
    CHECK(json.find("time") == std::string::npos);
}

TEST_CASE("slowdown table at the published epsilon") {
    std::vector<SlowdownRow> rows = slowdown_table(Epsilon(0.0006));
    REQUIRE(rows.size() == 10);

    // exactly the 0.90 and 0.70 rows disagree with the printed table
    for (const SlowdownRow& r : rows) {
        bool should_flag = r.p == 0.90 || r.p == 0.70;
        CHECK(r.flagged == should_flag);
        CHECK(r.block_size == (std::uint64_t{1} << r.k));
        if (!should_flag)
            CHECK(r.k == r.published_k);
    }

    auto round5 = [](double x) { return std::round(x * 1e5) / 1e5; };
    CHECK(rows[0].p == 0.99);
    CHECK(rows[0].k == 9);
    CHECK(round5(rows[0].p_final) == 0.50002);
    CHECK(rows[1].k == 5); // published as 6
    CHECK(round5(rows[1].p_final) == 0.50040);
    CHECK(rows[4].k == 3); // published as 4
    CHECK(rows[7].p == 0.573);
    CHECK(round5(rows[7].p_final) == 0.50023);
    CHECK(rows[9].p == 0.525);
    CHECK(rows[9].k == 2);
    CHECK(round5(rows[9].p_final) == 0.50000);
}
