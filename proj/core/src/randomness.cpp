#include "peca/randomness.hpp"

#include "peca/evolve.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace peca {

namespace {

// Regularized upper incomplete gamma Q(a, x), series/continued-fraction split
// as in the usual numerical treatment; good to ~1e-12 for chi-square use.
double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0)
        throw std::invalid_argument("gamma_q domain");
    if (x == 0.0)
        return 1.0;
    if (x < a + 1.0) {
        // P(a, x) by series, return 1 - P.
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15)
                break;
        }
        const double p = sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        return 1.0 - p;
    }
    // Q(a, x) by Lentz continued fraction.
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15)
            break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace

std::vector<std::uint8_t> middle_column_bits(const RuleTable& rule, const Generation& initial,
                                             std::size_t n_bits) {
    const std::size_t width = initial.width();
    if (width <= 2 * n_bits + 1)
        throw std::invalid_argument("lattice width " + std::to_string(width) +
                                    " too narrow for " + std::to_string(n_bits) +
                                    " column bits; need width > 2*n_bits + 1");
    const std::size_t center = width / 2;
    std::vector<std::uint8_t> bits;
    bits.reserve(n_bits);
    Generation current = initial;
    for (std::size_t t = 0; t < n_bits; ++t) {
        current = step_packed(current, rule);
        bits.push_back(current.get(center) ? 1 : 0);
    }
    return bits;
}

RandomnessReport randomness_battery(std::span<const std::uint8_t> bits) {
    const std::size_t n = bits.size();
    if (n < 1024)
        throw std::invalid_argument("randomness battery requires at least 1024 bits");

    RandomnessReport report;
    report.n_bits = n;

    std::size_t ones = 0;
    for (const auto b : bits)
        ones += b ? 1 : 0;
    const std::size_t zeros = n - ones;
    const double nd = static_cast<double>(n);
    report.monobit_z = (2.0 * static_cast<double>(ones) - nd) / std::sqrt(nd);

    // Lag-1 autocorrelation of the +-1-mapped sequence.
    {
        const double mean = (2.0 * static_cast<double>(ones) - nd) / nd;
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = (bits[i] ? 1.0 : -1.0) - mean;
            den += x * x;
            if (i + 1 < n) {
                const double y = (bits[i + 1] ? 1.0 : -1.0) - mean;
                num += x * y;
            }
        }
        report.lag1_autocorrelation = den == 0.0 ? 0.0 : num / den;
    }

    // Wald-Wolfowitz runs statistic.
    {
        if (ones == 0 || zeros == 0) {
            report.runs_z = 0.0;
        } else {
            std::size_t runs = 1;
            for (std::size_t i = 1; i < n; ++i)
                runs += bits[i] != bits[i - 1] ? 1 : 0;
            const double n1 = static_cast<double>(ones), n0 = static_cast<double>(zeros);
            const double expected = 1.0 + 2.0 * n1 * n0 / nd;
            const double variance = (expected - 1.0) * (expected - 2.0) / (nd - 1.0);
            report.runs_z =
                variance > 0.0 ? (static_cast<double>(runs) - expected) / std::sqrt(variance) : 0.0;
        }
    }

    // Chi-square over the histogram of non-overlapping 8-bit blocks.
    {
        const std::size_t blocks = n / 8;
        std::array<std::size_t, 256> histogram{};
        for (std::size_t b = 0; b < blocks; ++b) {
            unsigned value = 0;
            for (std::size_t k = 0; k < 8; ++k)
                value = (value << 1) | bits[b * 8 + k];
            ++histogram[value];
        }
        const double expected = static_cast<double>(blocks) / 256.0;
        double chi2 = 0.0;
        for (const auto count : histogram) {
            const double d = static_cast<double>(count) - expected;
            chi2 += d * d / expected;
        }
        report.block_chi2_pvalue = gamma_q(255.0 / 2.0, chi2 / 2.0);
    }

    // Smallest exact period of the tail half; cycles longer than n/4 cannot
    // be confirmed by a full repetition inside the window.
    {
        const std::size_t start = n / 2;
        for (std::size_t p = 1; p <= n / 4; ++p) {
            bool periodic = true;
            for (std::size_t i = start; i + p < n; ++i) {
                if (bits[i] != bits[i + p]) {
                    periodic = false;
                    break;
                }
            }
            if (periodic) {
                report.period_found = p;
                break;
            }
        }
    }

    return report;
}

} // namespace peca
