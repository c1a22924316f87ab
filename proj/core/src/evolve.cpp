#include "peca/evolve.hpp"

#include <cstdint>

namespace peca {

Generation step(const Generation& g, const RuleTable& rule) {
    const std::size_t w = g.width();
    const bool periodic = g.boundary() == Boundary::Periodic;
    Generation next(w, g.boundary());
    for (std::size_t i = 0; i < w; ++i) {
        const bool left = i > 0 ? g.get(i - 1) : (periodic ? g.get(w - 1) : false);
        const bool right = i + 1 < w ? g.get(i + 1) : (periodic ? g.get(0) : false);
        const unsigned n = (static_cast<unsigned>(left) << 2) |
                           (static_cast<unsigned>(g.get(i)) << 1) |
                           static_cast<unsigned>(right);
        if (rule.output(n))
            next.set(i, true);
    }
    return next;
}

Generation step_packed(const Generation& g, const RuleTable& rule) {
    const std::size_t width = g.width();
    const bool periodic = g.boundary() == Boundary::Periodic;
    const auto cells = g.words();
    const std::size_t nw = cells.size();

    Generation next(width, g.boundary());

    // Shifted neighbor vectors: left[i] = x_{i-1}, right[i] = x_{i+1}.
    std::vector<std::uint64_t> left(nw), right(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        left[w] = (cells[w] << 1) | (w > 0 ? cells[w - 1] >> 63 : 0);
        right[w] = (cells[w] >> 1) | (w + 1 < nw ? cells[w + 1] << 63 : 0);
    }
    if (periodic) {
        const std::size_t last = width - 1;
        if ((cells[last >> 6] >> (last & 63)) & 1u)
            left[0] |= 1u;
        if (cells[0] & 1u)
            right[last >> 6] |= std::uint64_t{1} << (last & 63);
    }

    // Sum of products over the truth table's live neighborhoods.
    for (std::size_t w = 0; w < nw; ++w) {
        const std::uint64_t l = left[w], c = cells[w], r = right[w];
        std::uint64_t out = 0;
        for (unsigned n = 0; n < 8; ++n) {
            if (!rule.output(n))
                continue;
            out |= (n & 4 ? l : ~l) & (n & 2 ? c : ~c) & (n & 1 ? r : ~r);
        }
        next.words_[w] = out;
    }
    next.mask_padding();
    return next;
}

SpaceTimeDiagram evolve(const Generation& initial, const RuleTable& rule, std::size_t steps) {
    SpaceTimeDiagram d(initial);
    Generation current = initial;
    for (std::size_t t = 0; t < steps; ++t) {
        current = step_packed(current, rule);
        d.push_state(current);
    }
    return d;
}

} // namespace peca
