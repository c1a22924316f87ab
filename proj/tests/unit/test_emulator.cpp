#include "peca/emulator.hpp"

#include "peca/compile.hpp"
#include "peca/evolve.hpp"

#include "doctest.h"

#include <stdexcept>

#include <sstream>

using namespace peca;

namespace {

PulseTrainConfig train_for(std::size_t width, const PhotonicConfig& optics) {
    PulseTrainConfig cfg;
    cfg.num_pulses = width;
    cfg.optics = optics;
    return cfg;
}

} // namespace

TEST_CASE("loop thresholded rows reproduce the rule 90 evolution") {
    const PhotonicConfig optics{{1.0, 0.0, -1.0}, 0.5, {}};
    const auto init = Generation::single_seed(257);
    const auto trace = run_loop(init, train_for(257, optics), 128);
    const auto reference = evolve(init, RuleTable::from_number(90), 128);
    REQUIRE(trace.iterations.size() == 128);
    for (std::size_t t = 0; t < 128; ++t)
        CHECK(trace.iterations[t].bits == reference.row(t + 1));
}

TEST_CASE("feedback bits of one iteration are the encoding of the next") {
    const PhotonicConfig optics{{0.5, -0.8, 0.5}, 0.16, {}};
    const auto init = Generation::random(64, 21, Boundary::Periodic);
    const auto trace = run_loop(init, train_for(64, optics), 32);
    for (std::size_t t = 0; t + 1 < trace.iterations.size(); ++t) {
        const auto& bits = trace.iterations[t].bits;
        const auto& encoded = trace.iterations[t + 1].encoded;
        for (std::size_t i = 0; i < bits.width(); ++i)
            CHECK(encoded[i] == (bits.get(i) ? 1.0 : 0.0));
    }
}

TEST_CASE("a zero-iteration trace holds only the encoded initial condition") {
    const PhotonicConfig optics{{1.0, 0.0, -1.0}, 0.5, {}};
    const auto init = Generation::single_seed(5);
    const auto trace = run_loop(init, train_for(5, optics), 0);
    CHECK(trace.iterations.empty());
    CHECK(trace.initial == init);
    CHECK_THROWS_AS(throughput_report(trace), std::invalid_argument);
}

TEST_CASE("modeled iteration latency is pulses times the repetition period") {
    const PhotonicConfig optics{{1.0, 0.0, -1.0}, 0.5, {}};
    const auto init = Generation::single_seed(2001);
    const auto trace = run_loop(init, train_for(2001, optics), 1);
    const auto latency = trace.iteration_latency_ns();
    CHECK(latency == Rational(8004, 1)); // 8.004 microseconds
}

TEST_CASE("modeled update rate is the reciprocal of the repetition period") {
    const PhotonicConfig optics{{1.0, 0.0, -1.0}, 0.5, {}};
    for (const std::size_t width : {64u, 128u}) {
        const auto init = Generation::single_seed(width);
        const auto trace = run_loop(init, train_for(width, optics), 4);
        const auto report = throughput_report(trace);
        // 4 ns period: 2.5e8 cell updates per modeled second, independent of
        // the number of pulses.
        CHECK(report.modeled_updates_per_second == doctest::Approx(2.5e8));
        CHECK(report.emulator_updates_per_second > 0.0);
    }
}

TEST_CASE("edge pulses follow the boundary convention") {
    const PhotonicConfig optics{{1.0, 0.0, 0.0}, 0.5, {}}; // left tap only
    SUBCASE("fixed-dead edges see no partner pulse") {
        const auto init = Generation::from_string("100");
        const auto trace = run_loop(init, train_for(3, optics), 1);
        CHECK(trace.iterations[0].bits.to_string() == "010");
    }
    SUBCASE("periodic trains are cyclic") {
        const auto init = Generation::from_string("100", Boundary::Periodic);
        const auto trace = run_loop(init, train_for(3, optics), 3);
        CHECK(trace.iterations[0].bits.to_string() == "010");
        CHECK(trace.iterations[1].bits.to_string() == "001");
        CHECK(trace.iterations[2].bits.to_string() == "100");
    }
}

TEST_CASE("trace exports one json record per iteration") {
    const PhotonicConfig optics{{1.0, 0.0, -1.0}, 0.5, {}};
    const auto init = Generation::single_seed(9);
    const auto trace = run_loop(init, train_for(9, optics), 3);
    std::ostringstream out;
    write_trace_jsonl(out, trace);
    const std::string text = out.str();
    std::size_t lines = 0;
    for (const char c : text)
        lines += c == '\n' ? 1 : 0;
    CHECK(lines == 3);
    CHECK(text.find("\"iteration\":0") != std::string::npos);
    CHECK(text.find("\"bits\":") != std::string::npos);
    CHECK(text.find("\"intensities\":") != std::string::npos);
}

TEST_CASE("trace converts to a diagram with intensities") {
    const PhotonicConfig optics{{1.0, -0.6, -0.6}, 0.25, {}};
    const auto init = Generation::single_seed(65);
    const auto trace = run_loop(init, train_for(65, optics), 16);
    const auto d = trace_to_diagram(trace);
    CHECK(d.steps() == 16);
    CHECK(d.has_intensities());
    const auto reference = photonic_evolve(init, optics, 16);
    CHECK(d == reference);
}

TEST_CASE("pulse count must match the lattice width") {
    const PhotonicConfig optics{{1.0, 0.0, -1.0}, 0.5, {}};
    CHECK_THROWS_AS(run_loop(Generation::single_seed(8), train_for(9, optics), 1),
                    std::invalid_argument);
}

TEST_CASE("rational arithmetic stays reduced") {
    CHECK(Rational(8, 2) == Rational(4, 1));
    CHECK(Rational(1, 3) * 6 == Rational(2, 1));
    CHECK((Rational(1, 4) + Rational(1, 4)) == Rational(1, 2));
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational(4, 1).to_string() == "4");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}
