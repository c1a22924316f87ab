// Bootstraps the rule 54 fixtures: derive the periodic background, then scan
// local perturbations of it for clean gliders, soliton-like collisions, glider
// guns, and absorbing collisions. Found configurations are written as fixture
// JSON files (an initial row plus run parameters) for the test suite and the
// `fixture:` initial conditions of the CLI.
//
// Collisions are built by pair production: a perturbation that decays into a
// left/right mover pair carries zero net background phase, so reversing a
// settled row turns the diverging pair into a clean converging one with no
// anchoring dislocation anywhere on the ring.

#include "peca/evolve.hpp"
#include "peca/glider.hpp"
#include "peca/rule.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

using namespace peca;

namespace {

const RuleTable kRule54 = RuleTable::from_number(54);

// One spatial period of the background; the full cycle has temporal period 4
// with a half-period glide of 2 cells.
constexpr const char* kEtherUnit = "1000";

Generation ether_row(std::size_t width, std::size_t phase = 0) {
    std::string bits(width, '0');
    const std::string unit = kEtherUnit;
    for (std::size_t i = 0; i < width; ++i)
        bits[i] = unit[(i + phase) % unit.size()];
    return Generation::from_string(bits, Boundary::Periodic);
}

Generation perturb(const Generation& base, std::size_t at, std::uint32_t pattern,
                   std::size_t length) {
    Generation g = base;
    for (std::size_t k = 0; k < length; ++k)
        g.set(at + k, (pattern >> k) & 1u);
    return g;
}

Generation advance(Generation g, std::size_t steps) {
    for (std::size_t k = 0; k < steps; ++k)
        g = step_packed(g, kRule54);
    return g;
}

struct Outcome {
    std::vector<GliderEvent> events;
    SpaceTimeDiagram filtered;
};

Outcome classify(const Generation& initial, std::size_t steps, const EtherTiling& ether) {
    const auto diagram = evolve(initial, kRule54, steps);
    Outcome outcome;
    outcome.filtered = filter_ether(diagram, ether);
    outcome.events = extract_glider_events(outcome.filtered);
    return outcome;
}

std::string velocity_string(const GliderTrack& t) {
    return std::to_string(t.displacement) + "/" + std::to_string(t.period);
}

void describe(const Outcome& outcome) {
    std::cout << "  events=" << outcome.events.size();
    for (const auto& e : outcome.events) {
        std::cout << " [" << to_string(e.kind) << " t=" << e.t_start << ".." << e.t_end
                  << " tracks=";
        for (const auto& t : e.tracks)
            std::cout << ' ' << to_string(t.role) << ' ' << velocity_string(t) << "@"
                      << t.positions.front();
        if (e.phase_shift)
            std::cout << " shift=" << *e.phase_shift;
        std::cout << ']';
    }
    std::cout << '\n';
}

void write_fixture(const std::filesystem::path& dir, const std::string& name,
                   const std::string& description, const Generation& initial,
                   std::size_t steps) {
    nlohmann::json j;
    j["name"] = name;
    j["description"] = description;
    j["rule"] = 54;
    j["width"] = initial.width();
    j["boundary"] = to_string(initial.boundary());
    j["bits"] = initial.to_string();
    j["suggested_steps"] = steps;
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / (name + ".json"));
    out << j.dump(2) << '\n';
    std::cout << "wrote " << (dir / (name + ".json")).string() << '\n';
}

EtherTiling bootstrap_ether(std::size_t width, std::size_t steps) {
    const auto diagram = evolve(ether_row(width), kRule54, steps);
    return detect_ether(diagram, 8);
}

bool is_lone_moving_track(const Outcome& outcome, long direction) {
    std::size_t movers = 0;
    bool direction_ok = false;
    for (const auto& e : outcome.events) {
        if (e.kind != GliderEventKind::Track)
            return false;
        if (e.tracks.front().moving()) {
            ++movers;
            direction_ok = (e.tracks.front().displacement > 0) == (direction > 0);
        }
    }
    return movers == 1 && direction_ok;
}


// Live filtered cells of the trailing rows must cluster into at most
// `max_clusters` narrow windows: silent debris (extra walls, stationary
// trails) shows up here even when it never qualifies as a track.
std::size_t trailing_clusters(const SpaceTimeDiagram& filtered, std::size_t rows,
                              long cluster_gap = 16) {
    std::vector<long> cols;
    const std::size_t t0 = filtered.row_count() > rows ? filtered.row_count() - rows : 0;
    for (std::size_t t = t0; t < filtered.row_count(); ++t)
        for (std::size_t i = 0; i < filtered.width(); ++i)
            if (filtered.row(t).get(i))
                cols.push_back(static_cast<long>(i));
    std::sort(cols.begin(), cols.end());
    std::size_t clusters = 0;
    long last = -1;
    for (const long c : cols) {
        if (last < 0 || c - last > cluster_gap)
            ++clusters;
        last = c;
    }
    return clusters;
}

} // namespace

int main(int argc, char** argv) {
    const std::string command = argc > 1 ? argv[1] : "help";
    const std::filesystem::path out_dir = argc > 2 ? argv[2] : "fixtures";

    if (command == "ether") {
        const std::size_t width = 256, steps = 256;
        const auto diagram = evolve(ether_row(width), kRule54, steps);
        const auto ether = detect_ether(diagram, 8);
        std::cout << "tiling " << ether.spatial_period << "x" << ether.temporal_period
                  << " coverage " << ether.coverage << "\ntile rows:\n";
        for (std::size_t t = 0; t < ether.temporal_period; ++t) {
            for (std::size_t i = 0; i < ether.spatial_period; ++i)
                std::cout << (ether.tile[t * ether.spatial_period + i] ? '1' : '0');
            std::cout << '\n';
        }
        Generation g = ether_row(width);
        for (int k = 1; k <= 8; ++k) {
            g = step_packed(g, kRule54);
            if (g == ether_row(width))
                std::cout << "initial row recurs after " << k << " steps\n";
        }
        write_fixture(out_dir, "rule54-ether", "periodic background of rule 54",
                      ether_row(width), steps);
        return 0;
    }

    if (command == "gliders") {
        // Clean single movers: the whole filtered run is one moving track
        // plus at most its stationary phase anchor, and the trailing rows
        // hold at most those two clusters.
        const std::size_t width = 640, steps = 140;
        const auto ether = bootstrap_ether(width, 128);
        const Generation base = ether_row(width);
        const std::size_t at0 = width / 2;

        nlohmann::json seeds;
        seeds["right"] = nlohmann::json::array();
        seeds["left"] = nlohmann::json::array();
        seeds["still"] = nlohmann::json::array();
        bool wrote_right = false, wrote_left = false;
        for (std::size_t length = 3; length <= 8; ++length) {
            for (std::size_t phase = 0; phase < 4; ++phase) {
                for (std::uint32_t pattern = 0; pattern < (1u << length); ++pattern) {
                    const auto initial = perturb(base, at0 + phase, pattern, length);
                    const auto outcome = classify(initial, steps, ether);
                    const bool right = is_lone_moving_track(outcome, +1);
                    const bool left = is_lone_moving_track(outcome, -1);
                    const bool still = outcome.events.size() == 1 &&
                                       outcome.events.front().kind == GliderEventKind::Track &&
                                       !outcome.events.front().tracks.front().moving();
                    if (!(right || left || still))
                        continue;
                    if (trailing_clusters(outcome.filtered, 8) > (still ? 1u : 2u))
                        continue;
                    nlohmann::json seed;
                    seed["length"] = length;
                    seed["phase"] = phase;
                    seed["pattern"] = pattern;
                    auto& bucket = seeds[right ? "right" : (left ? "left" : "still")];
                    if (bucket.size() < 8)
                        bucket.push_back(seed);
                    if (still)
                        continue;
                    if (right && !wrote_right) {
                        wrote_right = true;
                        std::cout << "right-mover len=" << length << " phase=" << phase
                                  << " pattern=" << pattern << '\n';
                        describe(outcome);
                        write_fixture(out_dir, "rule54-glider-right",
                                      "single right-moving glider on the rule 54 ether",
                                      advance(initial, 40), 200);
                    } else if (left && !wrote_left) {
                        wrote_left = true;
                        std::cout << "left-mover len=" << length << " phase=" << phase
                                  << " pattern=" << pattern << '\n';
                        describe(outcome);
                        write_fixture(out_dir, "rule54-glider-left",
                                      "single left-moving glider on the rule 54 ether",
                                      advance(initial, 40), 200);
                    }
                }
            }
        }
        std::filesystem::create_directories(out_dir);
        std::ofstream seed_out(out_dir / "glider_seeds.json");
        seed_out << seeds.dump(2) << '\n';
        std::cout << "seeds: " << seeds["right"].size() << " right, "
                  << seeds["left"].size() << " left\n";
        return wrote_right && wrote_left ? 0 : 1;
    }

    if (command == "collide") {
        // Head-on runs built from two clean single-mover seeds: the right
        // mover of seed A meets the left mover of seed B mid-arena. The
        // placement phase (and the seed pair itself) selects the outcome.
        const std::size_t width = 960, steps = 220;
        const auto ether = bootstrap_ether(width, 128);
        const Generation base = ether_row(width);
        const std::size_t xa = 320, xb0 = 640;

        std::ifstream seeds_in(out_dir / "glider_seeds.json");
        if (!seeds_in) {
            std::cerr << "run `gliders` first to produce glider_seeds.json\n";
            return 1;
        }
        const auto seeds = nlohmann::json::parse(seeds_in);

        bool have_collision = false, have_blackhole = false;
        for (const auto& a : seeds.at("right")) {
            for (const auto& b : seeds.at("left")) {
                for (std::size_t shift = 0; shift < 8; ++shift) {
                    if (have_collision && have_blackhole)
                        break;
                    auto initial = perturb(base, xa + a.at("phase").get<std::size_t>(),
                                           a.at("pattern").get<std::uint32_t>(),
                                           a.at("length").get<std::size_t>());
                    const std::size_t xb = xb0 + 4 * shift + b.at("phase").get<std::size_t>();
                    initial = perturb(initial, xb, b.at("pattern").get<std::uint32_t>(),
                                      b.at("length").get<std::size_t>());
                    const auto outcome = classify(initial, steps, ether);

                    const GliderEvent* interaction = nullptr;
                    std::size_t interactions = 0;
                    for (const auto& e : outcome.events) {
                        if (e.kind == GliderEventKind::Collision ||
                            e.kind == GliderEventKind::BlackHole ||
                            e.kind == GliderEventKind::Gun) {
                            ++interactions;
                            interaction = &e;
                        }
                    }
                    if (interactions != 1 || interaction == nullptr)
                        continue;
                    std::size_t in = 0, out = 0;
                    std::multiset<double> vin, vout;
                    for (const auto& t : interaction->tracks) {
                        if (t.role == TrackRole::Incoming) {
                            ++in;
                            vin.insert(t.velocity);
                        }
                        if (t.role == TrackRole::Outgoing) {
                            ++out;
                            vout.insert(t.velocity);
                        }
                    }
                    if (!have_collision && interaction->kind == GliderEventKind::Collision &&
                        in == 2 && out == 2 && vin == vout && interaction->phase_shift &&
                        *interaction->phase_shift != 0) {
                        have_collision = true;
                        std::cout << "collision seeds a=" << a.dump() << " b=" << b.dump()
                                  << " shift=" << shift << '\n';
                        describe(outcome);
                        write_fixture(out_dir, "rule54-collision",
                                      "two gliders meeting head-on and passing through "
                                      "with a spatial phase shift",
                                      initial, steps);
                    } else if (!have_blackhole &&
                               interaction->kind == GliderEventKind::BlackHole && in >= 1 &&
                               out == 0) {
                        have_blackhole = true;
                        std::cout << "black hole seeds a=" << a.dump() << " b=" << b.dump()
                                  << " shift=" << shift << '\n';
                        describe(outcome);
                        write_fixture(out_dir, "rule54-blackhole",
                                      "two gliders absorbed with nothing emitted",
                                      initial, steps);
                    }
                }
            }
        }
        // Movers threading stationary structures: the classic soliton-like
        // pass-through in this rule pairs a glider with a standing target.
        if (!have_collision) {
            const std::size_t still_steps = 300;
            for (const auto& a : seeds.at("right")) {
                for (const auto& b : seeds.at("still")) {
                    for (std::size_t shift = 0; shift < 8 && !have_collision; ++shift) {
                        auto initial = perturb(base, xa + a.at("phase").get<std::size_t>(),
                                               a.at("pattern").get<std::uint32_t>(),
                                               a.at("length").get<std::size_t>());
                        const std::size_t xb =
                            480 + 4 * shift + b.at("phase").get<std::size_t>();
                        initial = perturb(initial, xb, b.at("pattern").get<std::uint32_t>(),
                                          b.at("length").get<std::size_t>());
                        const auto outcome = classify(initial, still_steps, ether);
                        const GliderEvent* interaction = nullptr;
                        std::size_t interactions = 0;
                        for (const auto& e : outcome.events) {
                            if (e.kind != GliderEventKind::Track) {
                                ++interactions;
                                interaction = &e;
                            }
                        }
                        if (interactions != 1 || interaction == nullptr ||
                            interaction->kind != GliderEventKind::Collision)
                            continue;
                        std::multiset<double> vin, vout;
                        std::size_t in = 0, out = 0;
                        for (const auto& t : interaction->tracks) {
                            if (t.role == TrackRole::Incoming) {
                                ++in;
                                vin.insert(t.velocity);
                            }
                            if (t.role == TrackRole::Outgoing) {
                                ++out;
                                vout.insert(t.velocity);
                            }
                        }
                        if (in >= 2 && vin == vout && interaction->phase_shift &&
                            *interaction->phase_shift != 0) {
                            have_collision = true;
                            std::cout << "collision (through standing target) a=" << a.dump()
                                      << " b=" << b.dump() << " shift=" << shift << '\n';
                            describe(outcome);
                            write_fixture(out_dir, "rule54-collision",
                                          "glider threading a standing localization, both "
                                          "emerging with a spatial phase shift",
                                          initial, still_steps);
                        }
                    }
                }
            }
        }

        // Mirror-symmetric head-on runs: reflecting the whole row about a
        // background-symmetric axis makes the evolution mirror itself, so
        // any surviving movers leave in velocity-balanced pairs and only the
        // re-emission phase has to be found.
        if (!have_collision) {
            const std::size_t mirror_steps = 420;
            for (const auto& a : seeds.at("right")) {
                for (const std::size_t axis : {960ul, 964ul}) {
                    for (const std::size_t slide : {0ul, 4ul, 8ul, 12ul}) {
                        if (have_collision)
                            break;
                        const std::size_t phase = a.at("phase").get<std::size_t>();
                        const std::size_t length = a.at("length").get<std::size_t>();
                        const std::uint32_t pattern = a.at("pattern").get<std::uint32_t>();
                        const std::size_t xa = 280 + slide + phase;
                        auto initial = perturb(base, xa, pattern, length);
                        for (std::size_t k = 0; k < length; ++k) {
                            const std::size_t cell = xa + k;
                            const std::size_t mirrored = (axis - cell) % width;
                            initial.set(mirrored, (pattern >> k) & 1u);
                        }
                        const auto outcome = classify(initial, mirror_steps, ether);

                        const GliderEvent* interaction = nullptr;
                        std::size_t interactions = 0;
                        for (const auto& e : outcome.events) {
                            if (e.kind != GliderEventKind::Track) {
                                ++interactions;
                                interaction = &e;
                            }
                        }
                        if (interactions != 1 || interaction == nullptr ||
                            interaction->kind != GliderEventKind::Collision)
                            continue;
                        std::multiset<double> vin, vout;
                        std::size_t in_movers = 0, out_movers = 0;
                        for (const auto& t : interaction->tracks) {
                            if (t.role == TrackRole::Incoming) {
                                vin.insert(t.velocity);
                                in_movers += t.moving() ? 1 : 0;
                            }
                            if (t.role == TrackRole::Outgoing) {
                                vout.insert(t.velocity);
                                out_movers += t.moving() ? 1 : 0;
                            }
                        }
                        if (in_movers >= 2 && out_movers >= 2 && vin == vout &&
                            interaction->phase_shift && *interaction->phase_shift != 0) {
                            have_collision = true;
                            std::cout << "mirror collision a=" << a.dump() << " axis=" << axis
                                      << " slide=" << slide << '\n';
                            describe(outcome);
                            write_fixture(out_dir, "rule54-collision",
                                          "two gliders meeting head-on and re-emerging with "
                                          "a spatial phase shift",
                                          initial, mirror_steps);
                        }
                    }
                }
            }
        }

        std::cout << (have_collision ? "collision found\n" : "collision MISSING\n")
                  << (have_blackhole ? "black hole found\n" : "black hole MISSING\n");
        return have_collision && have_blackhole ? 0 : 1;
    }

    if (command == "gun") {
        // Emitter found by the perturbation inventory: a persistent core
        // shedding a glider pair at a fixed cadence.
        const std::size_t width = 960, steps = 400;
        const auto ether = bootstrap_ether(width, 128);
        const Generation base = ether_row(width);
        const std::size_t at0 = width / 2;

        for (std::size_t length = 6; length <= 8; ++length) {
            for (std::size_t phase = 0; phase < 4; ++phase) {
                for (std::uint32_t pattern = 0; pattern < (1u << length); ++pattern) {
                    const auto initial = perturb(base, at0 + phase, pattern, length);
                    const auto outcome = classify(initial, steps, ether);
                    if (outcome.events.size() != 1)
                        continue;
                    const auto& e = outcome.events.front();
                    if (e.kind != GliderEventKind::Gun)
                        continue;
                    std::size_t emitted = 0;
                    for (const auto& t : e.tracks)
                        emitted += t.role == TrackRole::Outgoing ? 1 : 0;
                    std::cout << "gun len=" << length << " phase=" << phase
                              << " pattern=" << pattern << " emitted=" << emitted << '\n';
                    describe(outcome);
                    if (emitted >= 4) {
                        write_fixture(out_dir, "rule54-gun",
                                      "persistent localization emitting gliders at "
                                      "regular intervals",
                                      initial, steps);
                        return 0;
                    }
                }
            }
        }
        std::cout << "gun MISSING\n";
        return 1;
    }

    std::cout << "usage: peca_fixture_search {ether|gliders|pairs|gun} [out_dir]\n";
    return 0;
}
