#include "peca/fractal.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace peca {

namespace {

// Least-squares slope and r^2 of y against x. A flat y (zero variance) fits
// slope 0 with r^2 defined as 1.
struct Fit {
    double slope = 0.0;
    double r2 = 1.0;
};

Fit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    Fit fit;
    if (sxx == 0.0)
        return fit;
    fit.slope = sxy / sxx;
    fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

} // namespace

FractalReport box_counting_dimension(const SpaceTimeDiagram& d,
                                     std::span<const std::size_t> sizes) {
    if (d.row_count() == 0 || d.live_count() == 0)
        throw std::invalid_argument("box counting requires at least one live cell");
    if (sizes.empty())
        throw std::invalid_argument("box counting requires at least one box size");
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (sizes[k] < 1 || !std::has_single_bit(sizes[k]))
            throw std::invalid_argument("box sizes must be powers of two");
        if (k > 0 && sizes[k] <= sizes[k - 1])
            throw std::invalid_argument("box sizes must be strictly increasing");
    }

    const std::size_t height = d.row_count();
    const std::size_t width = d.width();

    FractalReport report;
    report.box_sizes.assign(sizes.begin(), sizes.end());
    report.counts.reserve(sizes.size());

    for (const std::size_t s : sizes) {
        const std::size_t box_rows = (height + s - 1) / s;
        const std::size_t box_cols = (width + s - 1) / s;
        std::vector<std::uint8_t> occupied(box_rows * box_cols, 0);
        for (std::size_t t = 0; t < height; ++t) {
            const auto words = d.row(t).words();
            const std::size_t row_base = (t / s) * box_cols;
            for (std::size_t w = 0; w < words.size(); ++w) {
                std::uint64_t bits = words[w];
                while (bits != 0) {
                    const std::size_t i = w * 64 + std::countr_zero(bits);
                    occupied[row_base + i / s] = 1;
                    bits &= bits - 1;
                }
            }
        }
        std::size_t count = 0;
        for (const auto cell : occupied)
            count += cell;
        report.counts.push_back(count);
    }

    // Fit log(count) against log(1/size) over the scaling window: scales
    // where the boxes neither saturate into individual live cells (count
    // above a quarter of the point count) nor starve (fewer than 16 occupied
    // boxes). Every count is still reported; a window with fewer than two
    // scales falls back to the full size list.
    const std::size_t points = d.live_count();
    std::vector<double> x, y;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        const std::size_t count = report.counts[k];
        if (count * 4 > points || count < 16)
            continue;
        x.push_back(-std::log(static_cast<double>(sizes[k])));
        y.push_back(std::log(static_cast<double>(count)));
    }
    if (x.size() < 2) {
        x.clear();
        y.clear();
        for (std::size_t k = 0; k < sizes.size(); ++k) {
            x.push_back(-std::log(static_cast<double>(sizes[k])));
            y.push_back(std::log(static_cast<double>(report.counts[k])));
        }
    }
    const auto fit = linear_fit(x, y);
    report.dimension = fit.slope;
    report.fit_r2 = fit.r2;
    return report;
}

std::vector<std::size_t> default_box_sizes(std::size_t max_size) {
    std::vector<std::size_t> sizes;
    for (std::size_t s = 1; s <= max_size; s *= 2)
        sizes.push_back(s);
    if (sizes.empty())
        sizes.push_back(1);
    return sizes;
}

} // namespace peca
