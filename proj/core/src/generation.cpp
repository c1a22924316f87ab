#include "peca/generation.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <string>

namespace peca {

namespace {

std::size_t word_count(std::size_t width) { return (width + 63) / 64; }

} // namespace

const char* to_string(Boundary b) noexcept {
    return b == Boundary::Periodic ? "periodic" : "fixed-dead";
}

Boundary boundary_from_string(std::string_view name) {
    if (name == "periodic")
        return Boundary::Periodic;
    if (name == "dead" || name == "fixed-dead")
        return Boundary::FixedDead;
    throw std::invalid_argument("unknown boundary '" + std::string(name) +
                                "' (expected 'periodic' or 'dead')");
}

Generation::Generation(std::size_t width, Boundary boundary)
    : width_(width), boundary_(boundary), words_(word_count(width), 0) {
    if (width == 0)
        throw std::invalid_argument("generation width must be >= 1");
}

Generation Generation::single_seed(std::size_t width, Boundary boundary) {
    Generation g(width, boundary);
    g.set(width / 2, true);
    return g;
}

Generation Generation::random(std::size_t width, std::uint64_t seed, Boundary boundary) {
    Generation g(width, boundary);
    std::mt19937_64 rng(seed);
    for (auto& word : g.words_)
        word = rng();
    g.mask_padding();
    return g;
}

Generation Generation::from_string(std::string_view bits, Boundary boundary) {
    if (bits.empty())
        throw std::invalid_argument("cell string must be non-empty");
    Generation g(bits.size(), boundary);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const char c = bits[i];
        if (c != '0' && c != '1')
            throw std::invalid_argument("cell string may contain only '0' and '1'");
        if (c == '1')
            g.set(i, true);
    }
    return g;
}

bool Generation::get(std::size_t i) const {
    if (i >= width_)
        throw std::out_of_range("cell index " + std::to_string(i) + " >= width " +
                                std::to_string(width_));
    return (words_[i >> 6] >> (i & 63)) & 1u;
}

void Generation::set(std::size_t i, bool value) {
    if (i >= width_)
        throw std::out_of_range("cell index " + std::to_string(i) + " >= width " +
                                std::to_string(width_));
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

void Generation::flip(std::size_t i) { set(i, !get(i)); }

std::size_t Generation::live_count() const noexcept {
    std::size_t n = 0;
    for (const auto word : words_)
        n += static_cast<std::size_t>(std::popcount(word));
    return n;
}

bool Generation::any_live() const noexcept {
    for (const auto word : words_)
        if (word != 0)
            return true;
    return false;
}

std::optional<std::size_t> Generation::first_live() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0)
            return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
}

std::optional<std::size_t> Generation::last_live() const noexcept {
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w] != 0)
            return w * 64 + (63 - static_cast<std::size_t>(std::countl_zero(words_[w])));
    return std::nullopt;
}

Generation Generation::operator^(const Generation& other) const {
    if (width_ != other.width_ || boundary_ != other.boundary_)
        throw std::invalid_argument("cannot xor generations of different shape");
    Generation out(width_, boundary_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        out.words_[w] = words_[w] ^ other.words_[w];
    return out;
}

std::string Generation::to_string() const {
    std::string s(width_, '0');
    for (std::size_t i = 0; i < width_; ++i)
        if ((words_[i >> 6] >> (i & 63)) & 1u)
            s[i] = '1';
    return s;
}

void Generation::mask_padding() noexcept {
    const std::size_t tail = width_ & 63;
    if (tail != 0)
        words_.back() &= (std::uint64_t{1} << tail) - 1;
}

} // namespace peca
