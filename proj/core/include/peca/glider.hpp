#pragma once

#include "peca/diagram.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace peca {

/// Periodic background tiling of a space-time diagram. The tile holds
/// temporal_period rows of spatial_period cells, anchored at the diagram
/// origin.
struct EtherTiling {
    std::size_t spatial_period = 1;
    std::size_t temporal_period = 1;
    std::vector<std::uint8_t> tile; ///< row-major, temporal_period x spatial_period
    double coverage = 0.0;          ///< fraction of scored cells matching

    std::uint8_t at(std::size_t t, std::size_t i) const {
        return tile[(t % temporal_period) * spatial_period + (i % spatial_period)];
    }
};

/// Scan all (spatial, temporal) period pairs up to max_period, build the
/// majority-vote tile for each over the diagram's central region, and return
/// the minimal-area tiling whose match fraction exceeds 90%. Throws
/// std::runtime_error when no tiling qualifies (the diagram is not
/// background-dominated).
EtherTiling detect_ether(const SpaceTimeDiagram& d, std::size_t max_period = 8);

/// Difference against the locally phase-aligned periodic extension of the
/// ether: each tile-sized block picks the cyclic phase that matches it best,
/// so uniformly shifted background domains vanish and only departures from
/// the background stay live. The background phase may differ across a
/// glider, which is why alignment is chosen per band rather than globally.
SpaceTimeDiagram filter_ether(const SpaceTimeDiagram& d, const EtherTiling& ether);

enum class GliderEventKind { Track, Collision, Gun, BlackHole };
enum class TrackRole { Lone, Incoming, Outgoing, Core };

const char* to_string(GliderEventKind k) noexcept;
const char* to_string(TrackRole r) noexcept;

/// One localized structure followed through time on a filtered diagram.
struct GliderTrack {
    TrackRole role = TrackRole::Lone;
    std::size_t t_start = 0; ///< first row, inclusive
    std::size_t t_end = 0;   ///< last row, inclusive
    std::vector<long> positions; ///< leftmost live column per row
    long displacement = 0;   ///< cells advanced per shape period
    std::size_t period = 1;  ///< shape recurrence period, steps
    double velocity = 0.0;   ///< displacement / period, cells per step

    bool moving() const noexcept;
    bool same_velocity(const GliderTrack& other) const noexcept;
};

struct GliderEvent {
    GliderEventKind kind = GliderEventKind::Track;
    std::size_t t_start = 0;
    std::size_t t_end = 0;
    std::vector<GliderTrack> tracks;
    /// Collisions: spatial offset between an outgoing track and the
    /// extrapolation of its velocity-matched incoming track.
    std::optional<long> phase_shift;
};

/// Group the live cells of an ether-filtered diagram into connected
/// components, extract periodic tracks, and classify each component:
///   Track     - a single localized structure with recurring shape,
///   Collision - moving tracks meet and moving tracks leave,
///   Gun       - a persistent structure emits regularly spaced tracks,
///   BlackHole - moving tracks are absorbed and none leave.
std::vector<GliderEvent> extract_glider_events(const SpaceTimeDiagram& filtered);

} // namespace peca
