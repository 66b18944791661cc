#include <doctest.h>

#include <cmath>

#include "pafold/channel_sim.hpp"

using namespace pafold;

TEST_CASE("preset table") {
    SchemePreset kljn = kljn_preset();
    CHECK(kljn.p.value() == 0.525);
    CHECK(kljn.fidelity == 0.9998);
    CHECK(ufl_preset().p.value() == 0.65);
    CHECK(ufl_preset().fidelity == 0.994);
    CHECK(liu_preset().p.value() == 0.573);
    CHECK(liu_preset().fidelity == 0.918);
    CHECK(preset_by_name("liu").name == "liu");
    CHECK_THROWS_AS(preset_by_name("bb84"), std::domain_error);
    CHECK_THROWS_AS(custom_preset(GuessProbability(0.6), 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(custom_preset(GuessProbability(0.6), 1.1),
                    std::domain_error);
}

TEST_CASE("exchange_raw rejects empty requests") {
    CHECK_THROWS_AS(exchange_raw(kljn_preset(), 0, 1), std::invalid_argument);
}

TEST_CASE("perfect fidelity never discards") {
    auto [records, stats] =
        exchange_raw(custom_preset(GuessProbability(0.6), 1.0), 1000, 3);
    CHECK(stats.generated == 1000);
    CHECK(stats.discarded == 0);
    CHECK(stats.kept == 1000);
    for (const auto& r : records) {
        CHECK(r.alice_bit == r.bob_bit);
        CHECK(r.kept);
    }
}

TEST_CASE("kept records always agree; stats add up") {
    auto [records, stats] = exchange_raw(liu_preset(), 50000, 9);
    CHECK(stats.generated == stats.kept + stats.discarded);
    for (const auto& r : records)
        if (r.kept)
            REQUIRE(r.alice_bit == r.bob_bit);
}

TEST_CASE("coin-flip Eve stays near one half") {
    std::uint64_t n = 200000;
    auto [records, stats] =
        exchange_raw(custom_preset(GuessProbability(0.5), 1.0), n, 5);
    std::uint64_t correct = 0;
    for (const auto& r : records)
        correct += r.eve_guess == r.alice_bit;
    double rate = static_cast<double>(correct) / static_cast<double>(n);
    double sigma = std::sqrt(0.25 / static_cast<double>(n));
    CHECK(std::abs(rate - 0.5) < 4 * sigma);
}

TEST_CASE("sift rate tracks the fidelity parameter") {
    std::uint64_t n = 1000000;
    auto [records, stats] = exchange_raw(liu_preset(), n, 17);
    double f = liu_preset().fidelity;
    double rate = static_cast<double>(stats.kept) / static_cast<double>(n);
    double sigma = std::sqrt(f * (1.0 - f) / static_cast<double>(n));
    CHECK(std::abs(rate - f) < 3 * sigma);
}

TEST_CASE("eve raw rate tracks p") {
    std::uint64_t n = 500000;
    auto [records, stats] = exchange_raw(kljn_preset(), n, 23);
    std::uint64_t correct = 0;
    for (const auto& r : records)
        if (r.kept)
            correct += r.eve_guess == r.alice_bit;
    double p = kljn_preset().p.value();
    double rate =
        static_cast<double>(correct) / static_cast<double>(stats.kept);
    double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(stats.kept));
    CHECK(std::abs(rate - p) < 4 * sigma);
}

TEST_CASE("extra discard predicate") {
    auto drop_ones = [](const RawExchangeRecord& r) { return r.alice_bit; };
    auto [records, stats] =
        exchange_raw(custom_preset(GuessProbability(0.6), 1.0), 1000, 3,
                     drop_ones);
    for (const auto& r : records)
        if (r.kept)
            REQUIRE(!r.alice_bit);
    CHECK(stats.kept + stats.discarded == stats.generated);
}

TEST_CASE("eve_folded_guess") {
    RawExchangeRecord right{true, true, true, true};
    RawExchangeRecord wrong{true, true, false, true};

    CHECK(eve_folded_guess({right}, 0) == right.eve_guess);
    // all guesses correct -> parity of guesses equals parity of bits
    CHECK(eve_folded_guess({right, right, right, right}, 2) == false);
    // exactly one wrong guess flips the folded parity
    CHECK(eve_folded_guess({right, right, right, wrong}, 2) == true);
    CHECK_THROWS_AS(eve_folded_guess({right, right, right}, 2),
                    std::length_error);
}

TEST_CASE("run_trial with perfect fidelity uses exactly L*2^k raw bits") {
    TrialResult t =
        run_trial(custom_preset(GuessProbability(0.6), 1.0), KeyRequest(8, 2),
                  42);
    CHECK(t.sift.generated == 32);
    CHECK(t.sift.kept == 32);
    CHECK(t.alice_key == t.bob_key);
    CHECK(t.alice_key.size() == 8);
}

TEST_CASE("run_trial keys always agree under sifting losses") {
    TrialResult t = run_trial(liu_preset(), KeyRequest(500, 2), 1234);
    CHECK(t.alice_key == t.bob_key);
    CHECK(t.sift.kept >= 2000);
    CHECK(t.sift.generated > t.sift.kept); // Liu fidelity is far from 1
}

TEST_CASE("identical seeds reproduce identical trials") {
    TrialResult a = run_trial(kljn_preset(), KeyRequest(200, 2), 77);
    TrialResult b = run_trial(kljn_preset(), KeyRequest(200, 2), 77);
    CHECK(a.alice_key == b.alice_key);
    CHECK(a.eve_key == b.eve_key);
    CHECK(a.sift.generated == b.sift.generated);

    TrialResult c = run_trial(kljn_preset(), KeyRequest(200, 2), 78);
    CHECK(c.eve_key != a.eve_key); // different stream
}

TEST_CASE("records are a pure function of (seed, index)") {
    SchemePreset preset = ufl_preset();
    auto [records, stats] = exchange_raw(preset, 100, 55);
    for (std::uint64_t i = 0; i < records.size(); ++i) {
        RawExchangeRecord r = make_record(preset, 55, i);
        REQUIRE(r.alice_bit == records[i].alice_bit);
        REQUIRE(r.bob_bit == records[i].bob_bit);
        REQUIRE(r.eve_guess == records[i].eve_guess);
    }
}
