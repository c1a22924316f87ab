#pragma once

#include "peca/diagram.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace peca {

struct FractalReport {
    std::vector<std::size_t> box_sizes;
    std::vector<std::size_t> counts;
    double dimension = 0.0; ///< least-squares slope of log count vs log(1/size)
    double fit_r2 = 0.0;
};

/// Count occupied size x size boxes on a grid anchored at the diagram origin
/// and fit log(count) against log(1/size). Sizes must be strictly increasing
/// powers of two. The slope is taken over the scaling window, skipping
/// scales saturated into individual cells (count above a quarter of the
/// live-cell total) and starved scales (fewer than 16 occupied boxes);
/// counts for every requested size are reported regardless. Throws
/// std::invalid_argument for an empty diagram or a bad size list.
FractalReport box_counting_dimension(const SpaceTimeDiagram& d,
                                     std::span<const std::size_t> sizes);

/// {1, 2, 4, ..., max_size}; max_size is rounded down to a power of two.
std::vector<std::size_t> default_box_sizes(std::size_t max_size);

} // namespace peca
