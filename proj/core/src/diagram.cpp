#include "peca/diagram.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace peca {

SpaceTimeDiagram::SpaceTimeDiagram(Generation initial) { rows_.push_back(std::move(initial)); }

void SpaceTimeDiagram::push_state(Generation next) {
    if (rows_.empty())
        throw std::logic_error("diagram has no initial row");
    if (next.width() != width())
        throw std::invalid_argument("row width mismatch");
    if (!intensities_.empty())
        throw std::logic_error("diagram already carries intensities; push them for every row");
    rows_.push_back(std::move(next));
}

void SpaceTimeDiagram::push_state(Generation next, std::vector<double> intensities) {
    if (rows_.empty())
        throw std::logic_error("diagram has no initial row");
    if (next.width() != width())
        throw std::invalid_argument("row width mismatch");
    if (intensities.size() != width())
        throw std::invalid_argument("intensity row width mismatch");
    if (intensities_.empty() && rows_.size() > 1)
        throw std::logic_error("cannot start intensities mid-run");
    rows_.push_back(std::move(next));
    intensities_.insert(intensities_.end(), intensities.begin(), intensities.end());
}

const Generation& SpaceTimeDiagram::row(std::size_t t) const {
    if (t >= rows_.size())
        throw std::out_of_range("diagram row " + std::to_string(t) + " out of range");
    return rows_[t];
}

std::span<const double> SpaceTimeDiagram::intensity_row(std::size_t t) const {
    if (intensities_.empty())
        throw std::logic_error("diagram has no intensity field");
    if (t >= steps())
        throw std::out_of_range("intensity row " + std::to_string(t) + " out of range");
    return {intensities_.data() + t * width(), width()};
}

std::size_t SpaceTimeDiagram::live_count() const noexcept {
    std::size_t n = 0;
    for (const auto& row : rows_)
        n += row.live_count();
    return n;
}

} // namespace peca
