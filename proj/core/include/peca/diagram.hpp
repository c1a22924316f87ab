#pragma once

#include "peca/generation.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace peca {

/// Stacked generations of one run. Row 0 is the initial condition and row
/// t+1 follows from row t under the run's step operator. Runs through the
/// interference model also carry the pre-threshold intensity field;
/// intensity row t is the detected field that produced state row t+1.
class SpaceTimeDiagram {
public:
    SpaceTimeDiagram() = default;
    explicit SpaceTimeDiagram(Generation initial);

    void push_state(Generation next);
    void push_state(Generation next, std::vector<double> intensities);

    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t steps() const noexcept { return rows_.empty() ? 0 : rows_.size() - 1; }
    std::size_t width() const noexcept { return rows_.empty() ? 0 : rows_.front().width(); }
    Boundary boundary() const noexcept {
        return rows_.empty() ? Boundary::FixedDead : rows_.front().boundary();
    }

    const Generation& row(std::size_t t) const;
    std::span<const Generation> rows() const noexcept { return rows_; }

    bool has_intensities() const noexcept { return !intensities_.empty(); }
    std::span<const double> intensity_row(std::size_t t) const;

    std::size_t live_count() const noexcept;

    friend bool operator==(const SpaceTimeDiagram&, const SpaceTimeDiagram&) = default;

private:
    std::vector<Generation> rows_;
    std::vector<double> intensities_; // steps() * width(), row-major
};

} // namespace peca
