#pragma once

#include "peca/diagram.hpp"
#include "peca/generation.hpp"
#include "peca/rule.hpp"

#include <cstddef>

namespace peca {

/// Reference update: per-cell truth-table lookup with boundary handling.
Generation step(const Generation& g, const RuleTable& rule);

/// Word-parallel update, bit-identical to step(). The rule's truth table is
/// expanded into a sum-of-products over the shifted cell words.
Generation step_packed(const Generation& g, const RuleTable& rule);

/// Apply `steps` updates, keeping every row. Uses the packed fast path.
SpaceTimeDiagram evolve(const Generation& initial, const RuleTable& rule, std::size_t steps);

} // namespace peca
