#pragma once

#include "peca/diagram.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace peca {

enum class DiagramFormat { Pgm, Csv, Json };

DiagramFormat format_from_string(std::string_view name); // "pgm" | "csv" | "json"
DiagramFormat format_from_path(const std::filesystem::path& path);
const char* to_string(DiagramFormat f) noexcept;
const char* extension(DiagramFormat f) noexcept;

/// Import failure with the 1-based line and byte offset of the defect.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t offset);

    std::size_t line() const noexcept { return line_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t line_ = 0;
    std::size_t offset_ = 0;
};

/// PGM: plain (ASCII) graymap, one image row per diagram row, maxval 255.
/// Pixels are round(255 * intensity / max intensity) when intensities are
/// present (row 0 falls back to 255 * state, having no detected field) and
/// 255 * state otherwise; an all-dead intensity field maps to 0.
/// CSV: one row of comma-separated 0/1 states per diagram row.
/// JSON: the full structure, including the intensity field when present.
void export_diagram(std::ostream& out, const SpaceTimeDiagram& d, DiagramFormat format);
void export_diagram(const std::filesystem::path& path, const SpaceTimeDiagram& d,
                    DiagramFormat format);

/// Inverse of export_diagram on states (and on intensities for JSON). PGM
/// import recovers states as pixel > 0, which is exact for exports without
/// an intensity field. Throws ParseError on malformed input.
SpaceTimeDiagram import_diagram(std::istream& in, DiagramFormat format);
SpaceTimeDiagram import_diagram(const std::filesystem::path& path);
SpaceTimeDiagram import_diagram(const std::filesystem::path& path, DiagramFormat format);

} // namespace peca
