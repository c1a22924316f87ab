#include "peca/damage.hpp"

#include "peca/evolve.hpp"

#include <stdexcept>
#include <vector>

namespace peca {

namespace {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() < 2)
        return 0.0;
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxx == 0.0 ? 0.0 : sxy / sxx;
}

} // namespace

DamageReport damage_spreading(const RuleTable& rule, const Generation& initial,
                              std::size_t flip_index, std::size_t steps) {
    if (flip_index >= initial.width())
        throw std::domain_error("flip index outside the lattice");

    Generation twin = initial;
    twin.flip(flip_index);

    DamageReport report;
    report.difference = SpaceTimeDiagram(initial ^ twin);

    Generation a = initial;
    Generation b = twin;
    const std::size_t width = initial.width();

    const auto record_frontier = [&](std::size_t t, const Generation& diff) {
        const auto first = diff.first_live();
        if (!first)
            return;
        const std::size_t left = *first;
        const std::size_t right = *diff.last_live();
        if (left == 0 || right == width - 1)
            throw std::runtime_error(
                "difference frontier reached the lattice boundary at step " + std::to_string(t) +
                "; rerun with a wider lattice");
        report.frontiers.push_back({t, left, right});
    };

    record_frontier(0, report.difference.row(0));
    for (std::size_t t = 1; t <= steps; ++t) {
        a = step_packed(a, rule);
        b = step_packed(b, rule);
        Generation diff = a ^ b;
        record_frontier(t, diff);
        report.difference.push_state(std::move(diff));
    }

    // Rightward fit over every sampled row; leftward over the tail half,
    // where the growth settles to its asymptotic speed.
    std::vector<double> t_all, r_all, t_tail, l_tail;
    const double half = static_cast<double>(steps) / 2.0;
    for (const auto& sample : report.frontiers) {
        t_all.push_back(static_cast<double>(sample.step));
        r_all.push_back(static_cast<double>(sample.right) - static_cast<double>(flip_index));
        if (static_cast<double>(sample.step) >= half) {
            t_tail.push_back(static_cast<double>(sample.step));
            l_tail.push_back(static_cast<double>(flip_index) - static_cast<double>(sample.left));
        }
    }
    report.lambda_right = fit_slope(t_all, r_all);
    report.lambda_left = fit_slope(t_tail, l_tail);
    return report;
}

} // namespace peca
