#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace peca {

class RuleTable;

enum class Boundary { Periodic, FixedDead };

const char* to_string(Boundary b) noexcept;
Boundary boundary_from_string(std::string_view name);

/// Fixed-width row of binary cells, bit-packed little-endian: cell i lives in
/// bit (i % 64) of word (i / 64). Padding bits past `width` in the last word
/// are always zero.
class Generation {
public:
    Generation() = default;
    explicit Generation(std::size_t width, Boundary boundary = Boundary::FixedDead);

    /// All cells dead except the center cell floor(width / 2).
    static Generation single_seed(std::size_t width, Boundary boundary = Boundary::FixedDead);
    static Generation random(std::size_t width, std::uint64_t seed,
                             Boundary boundary = Boundary::FixedDead);
    static Generation from_string(std::string_view bits, Boundary boundary = Boundary::FixedDead);

    std::size_t width() const noexcept { return width_; }
    Boundary boundary() const noexcept { return boundary_; }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    std::size_t live_count() const noexcept;
    bool any_live() const noexcept;
    std::optional<std::size_t> first_live() const noexcept;
    std::optional<std::size_t> last_live() const noexcept;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Cell-wise exclusive or; both generations must share width and boundary.
    Generation operator^(const Generation& other) const;

    std::string to_string() const;

    friend bool operator==(const Generation&, const Generation&) noexcept = default;

private:
    void mask_padding() noexcept;

    friend Generation step_packed(const Generation&, const RuleTable&);

    std::size_t width_ = 0;
    Boundary boundary_ = Boundary::FixedDead;
    std::vector<std::uint64_t> words_;
};

} // namespace peca
