#include "peca/glider.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace peca {

namespace {

// Tracking parameters. Shape recurrence is capped at 16 steps; the rest are
// sized against the rule 54 background period (4 x 4) and its gliders.
constexpr std::size_t kMaxShapePeriod = 16;
constexpr long kBlobGap = 2;              // dead cells bridged inside one blob
constexpr std::size_t kMaxRowGap = 4;     // rows a structure may stay quiet
constexpr std::size_t kMinTrackRows = 24;
constexpr std::size_t kMinCoreFragmentRows = 8; // stationary pieces between emissions
constexpr long kCorePositionSpread = 6;   // column clustering of core fragments
constexpr std::size_t kEventSlack = 12;   // rows around component start/end
constexpr long kEdgeMargin = 4;           // columns counting as a side exit

struct Blob {
    std::size_t row = 0;
    long min_col = 0;
    long max_col = 0;
    std::vector<std::uint8_t> shape; // cells relative to min_col
    std::vector<std::size_t> children;
    std::vector<std::size_t> parents;
};

std::vector<Blob> find_blobs(const SpaceTimeDiagram& d) {
    std::vector<Blob> blobs;
    for (std::size_t t = 0; t < d.row_count(); ++t) {
        const auto& row = d.row(t);
        std::optional<Blob> open;
        long last_live = 0;
        for (std::size_t i = 0; i < row.width(); ++i) {
            if (!row.get(i))
                continue;
            const long col = static_cast<long>(i);
            if (open && col - last_live <= kBlobGap + 1) {
                open->shape.resize(static_cast<std::size_t>(col - open->min_col) + 1, 0);
                open->shape.back() = 1;
                open->max_col = col;
            } else {
                if (open)
                    blobs.push_back(std::move(*open));
                open = Blob{t, col, col, {1}, {}, {}};
            }
            last_live = col;
        }
        if (open)
            blobs.push_back(std::move(*open));
    }
    return blobs;
}

// Union-find over blob indices.
struct DisjointSet {
    std::vector<std::size_t> parent;
    explicit DisjointSet(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

void link_blobs(std::vector<Blob>& blobs, DisjointSet& components) {
    // Row index for fast lookup.
    std::map<std::size_t, std::vector<std::size_t>> by_row;
    for (std::size_t i = 0; i < blobs.size(); ++i)
        by_row[blobs[i].row].push_back(i);

    for (std::size_t u = 0; u < blobs.size(); ++u) {
        // Link to the nearest following row with an overlapping blob; larger
        // gaps only count when every closer row stayed quiet.
        for (std::size_t dt = 1; dt <= kMaxRowGap; ++dt) {
            const auto it = by_row.find(blobs[u].row + dt);
            if (it == by_row.end())
                continue;
            const long reach = static_cast<long>(dt);
            bool linked = false;
            for (const std::size_t v : it->second) {
                if (blobs[v].min_col > blobs[u].max_col + reach ||
                    blobs[v].max_col < blobs[u].min_col - reach)
                    continue;
                blobs[u].children.push_back(v);
                blobs[v].parents.push_back(u);
                components.unite(u, v);
                linked = true;
            }
            if (linked)
                break;
        }
    }
}

struct Chain {
    std::vector<std::size_t> blob_indices; // ordered by row
};

// Maximal simple paths: a chain runs through blobs with at most one parent
// and one child, and breaks at merges and splits.
std::vector<Chain> extract_chains(const std::vector<Blob>& blobs) {
    std::vector<Chain> chains;
    std::vector<char> used(blobs.size(), 0);
    for (std::size_t i = 0; i < blobs.size(); ++i) {
        if (used[i])
            continue;
        const bool chain_start = blobs[i].parents.size() != 1 ||
                                 blobs[blobs[i].parents[0]].children.size() > 1;
        if (!chain_start)
            continue;
        Chain chain;
        std::size_t cur = i;
        while (true) {
            chain.blob_indices.push_back(cur);
            used[cur] = 1;
            if (blobs[cur].children.size() != 1)
                break;
            const std::size_t next = blobs[cur].children[0];
            if (blobs[next].parents.size() != 1 || used[next])
                break;
            cur = next;
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

// One maximal periodic stretch of a chain. A chain only breaks at graph
// junctions, so a glider that fuses, decays, or stalls mid-flight still
// forms a single chain; segmentation recovers each regime separately.
struct Segment {
    std::size_t first_row = 0;
    std::size_t last_row = 0;
    std::size_t period = 1;
    long displacement = 0;
    std::vector<const Blob*> dense; // [first_row, last_row], nullable entries
};

std::vector<Segment> segment_chain(const std::vector<Blob>& blobs, const Chain& chain) {
    const std::size_t first_row = blobs[chain.blob_indices.front()].row;
    const std::size_t last_row = blobs[chain.blob_indices.back()].row;
    const std::size_t span = last_row - first_row + 1;
    std::vector<const Blob*> dense(span, nullptr);
    for (const std::size_t idx : chain.blob_indices)
        dense[blobs[idx].row - first_row] = &blobs[idx];

    std::vector<Segment> segments;
    std::size_t pos = 0;
    while (pos < span) {
        if (dense[pos] == nullptr) {
            ++pos;
            continue;
        }
        std::size_t best_end = pos;
        std::size_t best_period = 0;
        long best_delta = 0;
        for (std::size_t p = 1; p <= kMaxShapePeriod; ++p) {
            std::optional<long> delta;
            std::size_t solid_end = pos;
            std::size_t k = pos;
            for (; k + p < span; ++k) {
                const Blob* a = dense[k];
                const Blob* b = dense[k + p];
                if ((a == nullptr) != (b == nullptr))
                    break;
                if (a == nullptr)
                    continue;
                const long d = b->min_col - a->min_col;
                if (a->shape != b->shape)
                    break;
                if (!delta)
                    delta = d;
                else if (*delta != d)
                    break;
                solid_end = k + p;
            }
            const std::size_t length = solid_end - pos + 1;
            if (delta && length >= 2 * p && solid_end > best_end) {
                best_end = solid_end;
                best_period = p;
                best_delta = *delta;
            }
        }
        const std::size_t length = best_end - pos + 1;
        if (best_period > 0 && length >= kMinCoreFragmentRows) {
            Segment segment;
            segment.first_row = first_row + pos;
            segment.last_row = first_row + best_end;
            segment.period = best_period;
            segment.displacement = best_delta;
            segment.dense.assign(dense.begin() + pos, dense.begin() + best_end + 1);
            segments.push_back(std::move(segment));
            pos = best_end + 1;
        } else {
            ++pos;
        }
    }
    return segments;
}

GliderTrack make_track(const Segment& segment) {
    GliderTrack track;
    track.t_start = segment.first_row;
    track.t_end = segment.last_row;
    track.period = segment.period;
    track.displacement = segment.displacement;
    track.velocity =
        static_cast<double>(segment.displacement) / static_cast<double>(segment.period);

    track.positions.resize(segment.dense.size());
    long last_pos = 0;
    bool seen = false;
    for (std::size_t k = 0; k < segment.dense.size(); ++k) {
        if (segment.dense[k] != nullptr) {
            last_pos = segment.dense[k]->min_col;
            seen = true;
        }
        track.positions[k] = seen ? last_pos : 0;
    }
    return track;
}

// Mean leftmost position over one full period starting at chain row `from`
// (diagram row), so positions compare at matching shape phase.
std::optional<double> period_mean_position(const GliderTrack& track, std::size_t from,
                                           bool backwards) {
    const std::size_t p = track.period;
    if (track.t_end + 1 - track.t_start < p)
        return std::nullopt;
    std::size_t begin;
    if (backwards) {
        if (from < track.t_start + p - 1)
            return std::nullopt;
        begin = from - (p - 1);
    } else {
        begin = from;
        if (begin + p - 1 > track.t_end)
            return std::nullopt;
    }
    if (begin < track.t_start)
        return std::nullopt;
    double sum = 0.0;
    for (std::size_t k = 0; k < p; ++k)
        sum += static_cast<double>(track.positions[begin + k - track.t_start]);
    return sum / static_cast<double>(p);
}

std::optional<long> matched_pair_shift(const GliderTrack& in, const GliderTrack& out) {
    if (!in.same_velocity(out) || in.period != out.period)
        return std::nullopt;
    const auto ref_in = period_mean_position(in, in.t_end, true);
    const auto ref_out = period_mean_position(out, out.t_start, false);
    if (!ref_in || !ref_out)
        return std::nullopt;
    const double mid_in =
        static_cast<double>(in.t_end) - static_cast<double>(in.period - 1) / 2.0;
    const double mid_out =
        static_cast<double>(out.t_start) + static_cast<double>(out.period - 1) / 2.0;
    const double expected = *ref_in + in.velocity * (mid_out - mid_in);
    return std::lround(*ref_out - expected);
}

std::optional<long> collision_phase_shift(const std::vector<GliderTrack>& incoming,
                                          const std::vector<GliderTrack>& outgoing) {
    // Prefer the shift of a moving pair; a stationary participant matches
    // itself at shift 0 and would mask the interesting displacement.
    for (const bool movers_only : {true, false}) {
        for (const auto& out : outgoing) {
            if (movers_only && !out.moving())
                continue;
            for (const auto& in : incoming) {
                if (movers_only && !in.moving())
                    continue;
                if (const auto shift = matched_pair_shift(in, out))
                    return shift;
            }
        }
    }
    return std::nullopt;
}

} // namespace

bool GliderTrack::moving() const noexcept { return displacement != 0; }

bool GliderTrack::same_velocity(const GliderTrack& other) const noexcept {
    // Compare displacement/period as exact fractions.
    return static_cast<long long>(displacement) * static_cast<long long>(other.period) ==
           static_cast<long long>(other.displacement) * static_cast<long long>(period);
}

const char* to_string(GliderEventKind k) noexcept {
    switch (k) {
    case GliderEventKind::Track: return "track";
    case GliderEventKind::Collision: return "collision";
    case GliderEventKind::Gun: return "gun";
    case GliderEventKind::BlackHole: return "black-hole";
    }
    return "?";
}

const char* to_string(TrackRole r) noexcept {
    switch (r) {
    case TrackRole::Lone: return "lone";
    case TrackRole::Incoming: return "incoming";
    case TrackRole::Outgoing: return "outgoing";
    case TrackRole::Core: return "core";
    }
    return "?";
}

EtherTiling detect_ether(const SpaceTimeDiagram& d, std::size_t max_period) {
    if (d.row_count() == 0)
        throw std::invalid_argument("empty diagram");
    if (max_period < 1)
        throw std::invalid_argument("max_period must be >= 1");

    const std::size_t height = d.row_count();
    const std::size_t width = d.width();

    // Score over the central band of the run: late rows (past transients)
    // and the middle half of the columns.
    std::size_t r0 = height / 2, r1 = height;
    std::size_t c0 = width / 4, c1 = width - width / 4;
    if (r1 - r0 < 1)
        r0 = 0;
    if (c1 - c0 < 1) {
        c0 = 0;
        c1 = width;
    }

    struct Candidate {
        std::size_t px, pt;
    };
    std::vector<Candidate> candidates;
    for (std::size_t pt = 1; pt <= max_period; ++pt)
        for (std::size_t px = 1; px <= max_period; ++px)
            candidates.push_back({px, pt});
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        const std::size_t area_a = a.px * a.pt, area_b = b.px * b.pt;
        if (area_a != area_b)
            return area_a < area_b;
        if (a.pt != b.pt)
            return a.pt < b.pt;
        return a.px < b.px;
    });

    for (const auto& cand : candidates) {
        // Majority-vote tile over the scored region, anchored at the origin.
        std::vector<std::size_t> live(cand.pt * cand.px, 0), total(cand.pt * cand.px, 0);
        for (std::size_t t = r0; t < r1; ++t) {
            const auto& row = d.row(t);
            const std::size_t tphase = (t % cand.pt) * cand.px;
            for (std::size_t i = c0; i < c1; ++i) {
                const std::size_t slot = tphase + (i % cand.px);
                ++total[slot];
                live[slot] += row.get(i) ? 1 : 0;
            }
        }
        EtherTiling tiling;
        tiling.spatial_period = cand.px;
        tiling.temporal_period = cand.pt;
        tiling.tile.resize(cand.pt * cand.px);
        for (std::size_t s = 0; s < tiling.tile.size(); ++s)
            tiling.tile[s] = total[s] > 0 && 2 * live[s] > total[s] ? 1 : 0;

        std::size_t matches = 0, cells = 0;
        for (std::size_t t = r0; t < r1; ++t) {
            const auto& row = d.row(t);
            for (std::size_t i = c0; i < c1; ++i) {
                ++cells;
                matches += row.get(i) == (tiling.at(t, i) != 0) ? 1 : 0;
            }
        }
        tiling.coverage = cells > 0 ? static_cast<double>(matches) / static_cast<double>(cells) : 0.0;
        if (tiling.coverage > 0.9)
            return tiling;
    }
    throw std::runtime_error("no periodic background tiling exceeds 90% coverage; "
                             "the diagram is not ether-dominated");
}

SpaceTimeDiagram filter_ether(const SpaceTimeDiagram& d, const EtherTiling& ether) {
    const std::size_t height = d.row_count();
    const std::size_t width = d.width();
    const std::size_t pt = ether.temporal_period;
    const std::size_t px = ether.spatial_period;

    std::vector<Generation> out_rows;
    out_rows.reserve(height);
    for (std::size_t t = 0; t < height; ++t)
        out_rows.emplace_back(width, d.boundary());

    // Each tile-sized block picks its own cyclic phase, judged over the
    // block plus a one-tile halo: a uniformly shifted background domain
    // still vanishes, while a phase wall anywhere near the block forces
    // visible mismatches (without the halo, a bare domain wall could be
    // absorbed outright by per-block realignment).
    for (std::size_t bt = 0; bt < height; bt += pt) {
        const std::size_t t1 = std::min(bt + pt, height);
        const std::size_t ht0 = bt >= pt ? bt - pt : 0;
        const std::size_t ht1 = std::min(bt + 2 * pt, height);
        for (std::size_t bi = 0; bi < width; bi += px) {
            const std::size_t i1 = std::min(bi + px, width);
            const std::size_t hi0 = bi >= px ? bi - px : 0;
            const std::size_t hi1 = std::min(bi + 2 * px, width);

            std::size_t best_mismatch = static_cast<std::size_t>(-1);
            std::size_t best_dt = 0, best_di = 0;
            for (std::size_t dt = 0; dt < pt && best_mismatch != 0; ++dt) {
                for (std::size_t di = 0; di < px && best_mismatch != 0; ++di) {
                    std::size_t mismatch = 0;
                    for (std::size_t t = ht0; t < ht1; ++t)
                        for (std::size_t i = hi0; i < hi1; ++i)
                            mismatch += d.row(t).get(i) != (ether.at(t + dt, i + di) != 0) ? 1 : 0;
                    if (mismatch < best_mismatch) {
                        best_mismatch = mismatch;
                        best_dt = dt;
                        best_di = di;
                    }
                }
            }
            if (best_mismatch == 0)
                continue;
            for (std::size_t t = bt; t < t1; ++t)
                for (std::size_t i = bi; i < i1; ++i)
                    if (d.row(t).get(i) != (ether.at(t + best_dt, i + best_di) != 0))
                        out_rows[t].set(i, true);
        }
    }

    SpaceTimeDiagram filtered(out_rows.front());
    for (std::size_t t = 1; t < out_rows.size(); ++t)
        filtered.push_state(out_rows[t]);
    return filtered;
}

std::vector<GliderEvent> extract_glider_events(const SpaceTimeDiagram& filtered) {
    std::vector<GliderEvent> events;
    auto blobs = find_blobs(filtered);
    if (blobs.empty())
        return events;

    DisjointSet components(blobs.size());
    link_blobs(blobs, components);

    std::map<std::size_t, std::vector<std::size_t>> by_component;
    for (std::size_t i = 0; i < blobs.size(); ++i)
        by_component[components.find(i)].push_back(i);

    const auto chains = extract_chains(blobs);
    std::map<std::size_t, std::vector<std::size_t>> chains_by_component;
    for (std::size_t c = 0; c < chains.size(); ++c)
        chains_by_component[components.find(chains[c].blob_indices.front())].push_back(c);

    const long width = static_cast<long>(filtered.width());
    const std::size_t last_row = filtered.row_count() - 1;

    for (const auto& [root, members] : by_component) {
        std::size_t comp_start = blobs[members.front()].row;
        std::size_t comp_end = comp_start;
        for (const std::size_t idx : members) {
            comp_start = std::min(comp_start, blobs[idx].row);
            comp_end = std::max(comp_end, blobs[idx].row);
        }

        // Periodic segments of the component's chains: long ones are tracks,
        // short stationary ones are core fragments (an emitter's chain
        // breaks at every split, so its pieces arrive one emission period at
        // a time).
        std::vector<GliderTrack> tracks, fragments;
        const auto chain_it = chains_by_component.find(root);
        if (chain_it != chains_by_component.end()) {
            for (const std::size_t c : chain_it->second) {
                for (const auto& segment : segment_chain(blobs, chains[c])) {
                    auto track = make_track(segment);
                    const std::size_t rows = track.t_end - track.t_start + 1;
                    if (rows >= kMinTrackRows)
                        tracks.push_back(std::move(track));
                    else if (!track.moving())
                        fragments.push_back(std::move(track));
                }
            }
        }
        if (tracks.empty() && fragments.empty())
            continue;

        const auto starts_at_beginning = [&](const GliderTrack& t) {
            return t.t_start <= comp_start + kEventSlack;
        };
        // Outgoing means still in flight when the diagram ends (or gone out
        // the side): a track that merely survives until its component's last
        // row may simply have been annihilated there.
        const auto reaches_end = [&](const GliderTrack& t) {
            if (t.t_end + kEventSlack >= last_row)
                return true;
            const long final_pos = t.positions.back();
            return final_pos <= kEdgeMargin || final_pos >= width - 1 - kEdgeMargin;
        };

        // A persistent emitter core: stationary tracks and fragments whose
        // columns cluster and whose spans cover most of the component.
        std::optional<GliderTrack> core;
        {
            std::vector<const GliderTrack*> parts;
            for (const auto& t : tracks)
                if (!t.moving())
                    parts.push_back(&t);
            for (const auto& t : fragments)
                parts.push_back(&t);
            if (!parts.empty()) {
                long min_pos = parts.front()->positions.front();
                long max_pos = min_pos;
                std::size_t t0 = parts.front()->t_start, t1 = parts.front()->t_end;
                std::size_t covered = 0;
                for (const auto* t : parts) {
                    for (const long p : t->positions) {
                        min_pos = std::min(min_pos, p);
                        max_pos = std::max(max_pos, p);
                    }
                    t0 = std::min(t0, t->t_start);
                    t1 = std::max(t1, t->t_end);
                    covered += t->t_end - t->t_start + 1;
                }
                const std::size_t comp_span = comp_end - comp_start + 1;
                if (max_pos - min_pos <= kCorePositionSpread &&
                    t0 <= comp_start + kEventSlack && covered * 2 >= comp_span &&
                    (t1 - t0 + 1) * 10 >= comp_span * 6) {
                    GliderTrack merged;
                    merged.role = TrackRole::Core;
                    merged.t_start = t0;
                    merged.t_end = t1;
                    merged.period = parts.front()->period;
                    merged.displacement = 0;
                    merged.velocity = 0.0;
                    merged.positions.assign(t1 - t0 + 1, min_pos);
                    for (const auto* t : parts)
                        for (std::size_t k = 0; k < t->positions.size(); ++k)
                            merged.positions[t->t_start - t0 + k] = t->positions[k];
                    core = std::move(merged);
                }
            }
        }

        std::vector<GliderTrack> in_tracks, out_tracks;
        std::size_t full_span_movers = 0;
        for (const auto& t : tracks) {
            if (!t.moving())
                continue;
            bool in, out;
            if (core) {
                // With a persistent core, direction tells the story: a mover
                // born at the core and receding is an emission even when the
                // first one leaves right at the start of the run.
                const long core_x = core->positions.front();
                const long d_start = std::abs(t.positions.front() - core_x);
                const long d_end = std::abs(t.positions.back() - core_x);
                const bool receding = d_end > d_start;
                const bool born_at_core = d_start <= kCorePositionSpread + 2 * kBlobGap + 4;
                in = !receding && starts_at_beginning(t);
                out = receding && (born_at_core || reaches_end(t));
            } else {
                in = starts_at_beginning(t);
                out = reaches_end(t);
            }
            full_span_movers += in && out ? 1 : 0;
            if (in) {
                GliderTrack copy = t;
                copy.role = TrackRole::Incoming;
                in_tracks.push_back(copy);
            }
            if (out) {
                GliderTrack copy = t;
                copy.role = TrackRole::Outgoing;
                out_tracks.push_back(copy);
            }
        }

        GliderEvent event;
        event.t_start = comp_start;
        event.t_end = comp_end;

        const std::size_t moving_total = in_tracks.size() + out_tracks.size() - full_span_movers;
        const bool lone_stationary = tracks.size() == 1 && !tracks[0].moving() && !core &&
                                     starts_at_beginning(tracks[0]) && reaches_end(tracks[0]);
        const bool lone_mover = moving_total == 1 && full_span_movers == 1 && !core &&
                                tracks.size() == 1;

        if (lone_mover || lone_stationary) {
            event.kind = GliderEventKind::Track;
            GliderTrack t = tracks[0];
            t.role = TrackRole::Lone;
            event.tracks = {std::move(t)};
        } else if (core && in_tracks.empty() && out_tracks.empty()) {
            // A persistent localized structure with no traffic is a track of
            // its own (a stationary oscillator or a phase anchor).
            event.kind = GliderEventKind::Track;
            GliderTrack t = *core;
            t.role = TrackRole::Lone;
            event.tracks = {std::move(t)};
        } else if (core && in_tracks.empty() && out_tracks.size() >= 2) {
            event.kind = GliderEventKind::Gun;
            event.tracks.push_back(*core);
            for (auto& t : out_tracks)
                event.tracks.push_back(t);
        } else if (in_tracks.size() >= 2 && !out_tracks.empty()) {
            event.kind = GliderEventKind::Collision;
            for (auto& t : in_tracks)
                event.tracks.push_back(t);
            for (auto& t : out_tracks)
                event.tracks.push_back(t);
            event.phase_shift = collision_phase_shift(in_tracks, out_tracks);
        } else if (core && !in_tracks.empty() && !out_tracks.empty()) {
            // A mover threading a persistent stationary structure: the
            // structure takes part on both sides of the interaction at
            // velocity zero.
            event.kind = GliderEventKind::Collision;
            GliderTrack before = *core;
            before.role = TrackRole::Incoming;
            GliderTrack after = *core;
            after.role = TrackRole::Outgoing;
            for (auto& t : in_tracks)
                event.tracks.push_back(t);
            event.tracks.push_back(before);
            for (auto& t : out_tracks)
                event.tracks.push_back(t);
            event.tracks.push_back(after);
            std::vector<GliderTrack> all_in = in_tracks, all_out = out_tracks;
            all_in.push_back(before);
            all_out.push_back(after);
            event.phase_shift = collision_phase_shift(all_in, all_out);
        } else if (!in_tracks.empty() && out_tracks.empty()) {
            event.kind = GliderEventKind::BlackHole;
            for (auto& t : in_tracks)
                event.tracks.push_back(t);
            if (core)
                event.tracks.push_back(*core);
        } else {
            continue; // debris without a recognizable interaction
        }
        events.push_back(std::move(event));
    }

    std::sort(events.begin(), events.end(), [](const GliderEvent& a, const GliderEvent& b) {
        return a.t_start < b.t_start;
    });
    return events;
}

} // namespace peca
