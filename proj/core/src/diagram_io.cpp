#include "peca/diagram_io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

namespace peca {

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void export_pgm(std::ostream& out, const SpaceTimeDiagram& d) {
    const std::size_t height = d.row_count();
    const std::size_t width = d.width();
    out << "P2\n" << width << ' ' << height << "\n255\n";

    double max_intensity = 0.0;
    if (d.has_intensities())
        for (std::size_t t = 0; t < d.steps(); ++t)
            for (const double v : d.intensity_row(t))
                max_intensity = std::max(max_intensity, v);

    for (std::size_t t = 0; t < height; ++t) {
        for (std::size_t i = 0; i < width; ++i) {
            int pixel;
            if (d.has_intensities() && t > 0) {
                // Row t was produced by intensity row t-1; normalize to the
                // run's peak. An all-dead field maps to 0.
                const double v = d.intensity_row(t - 1)[i];
                pixel = max_intensity > 0.0
                            ? static_cast<int>(std::lround(255.0 * v / max_intensity))
                            : 0;
            } else {
                pixel = d.row(t).get(i) ? 255 : 0;
            }
            out << pixel << (i + 1 < width ? " " : "");
        }
        out << '\n';
    }
}

void export_csv(std::ostream& out, const SpaceTimeDiagram& d) {
    for (std::size_t t = 0; t < d.row_count(); ++t) {
        const auto& row = d.row(t);
        for (std::size_t i = 0; i < row.width(); ++i)
            out << (row.get(i) ? '1' : '0') << (i + 1 < row.width() ? "," : "");
        out << '\n';
    }
}

void export_json(std::ostream& out, const SpaceTimeDiagram& d) {
    nlohmann::json j;
    j["width"] = d.width();
    j["steps"] = d.steps();
    j["boundary"] = to_string(d.boundary());
    auto states = nlohmann::json::array();
    for (std::size_t t = 0; t < d.row_count(); ++t)
        states.push_back(d.row(t).to_string());
    j["states"] = std::move(states);
    if (d.has_intensities()) {
        auto intensities = nlohmann::json::array();
        for (std::size_t t = 0; t < d.steps(); ++t) {
            const auto row = d.intensity_row(t);
            intensities.push_back(std::vector<double>(row.begin(), row.end()));
        }
        j["intensities"] = std::move(intensities);
    }
    out << j.dump(2) << '\n';
}

// Tokenizer for plain PGM: whitespace-separated integers, '#' comments,
// tracked line/column for error reporting.
class PgmScanner {
public:
    explicit PgmScanner(std::istream& in) : in_(in) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

    long next_int(const char* what) {
        skip_separators();
        if (eof_)
            throw ParseError(std::string("unexpected end of PGM while reading ") + what, line_,
                             column_);
        if (!std::isdigit(static_cast<unsigned char>(peek_)))
            throw ParseError(std::string("expected digit while reading ") + what, line_, column_);
        long value = 0;
        while (!eof_ && std::isdigit(static_cast<unsigned char>(peek_))) {
            value = value * 10 + (peek_ - '0');
            advance();
        }
        return value;
    }

    void expect_magic() {
        skip_separators();
        if (eof_ || peek_ != 'P')
            throw ParseError("not a plain PGM (missing P2 magic)", line_, column_);
        advance();
        if (eof_ || peek_ != '2')
            throw ParseError("not a plain PGM (missing P2 magic)", line_, column_);
        advance();
    }

private:
    void advance() {
        const int c = in_.get();
        if (c == EOF) {
            eof_ = true;
            peek_ = '\0';
            return;
        }
        if (peek_ == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        peek_ = static_cast<char>(c);
    }

    void skip_separators() {
        if (!primed_) {
            primed_ = true;
            advance();
        }
        while (!eof_) {
            if (peek_ == '#') {
                while (!eof_ && peek_ != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(peek_))) {
                advance();
            } else {
                return;
            }
        }
    }

    std::istream& in_;
    char peek_ = '\0';
    bool primed_ = false;
    bool eof_ = false;
    std::size_t line_ = 1;
    std::size_t column_ = 0;
};

SpaceTimeDiagram import_pgm(std::istream& in) {
    PgmScanner scanner(in);
    scanner.expect_magic();
    const long width = scanner.next_int("width");
    const long height = scanner.next_int("height");
    const long maxval = scanner.next_int("maxval");
    if (width < 1 || height < 1)
        throw ParseError("PGM dimensions must be positive", scanner.line(), scanner.column());
    if (maxval < 1 || maxval > 65535)
        throw ParseError("PGM maxval out of range", scanner.line(), scanner.column());

    std::vector<Generation> rows;
    rows.reserve(static_cast<std::size_t>(height));
    for (long t = 0; t < height; ++t) {
        Generation row(static_cast<std::size_t>(width));
        for (long i = 0; i < width; ++i) {
            const long pixel = scanner.next_int("pixel");
            if (pixel < 0 || pixel > maxval)
                throw ParseError("pixel exceeds maxval", scanner.line(), scanner.column());
            if (pixel > 0)
                row.set(static_cast<std::size_t>(i), true);
        }
        rows.push_back(std::move(row));
    }
    SpaceTimeDiagram d(rows.front());
    for (std::size_t t = 1; t < rows.size(); ++t)
        d.push_state(rows[t]);
    return d;
}

SpaceTimeDiagram import_csv(std::istream& in) {
    std::vector<Generation> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::string bits;
        bits.reserve(line.size() / 2 + 1);
        std::size_t column = 0;
        bool expect_cell = true;
        for (const char c : line) {
            ++column;
            if (expect_cell) {
                if (c != '0' && c != '1')
                    throw ParseError("expected '0' or '1'", line_no, column);
                bits.push_back(c);
                expect_cell = false;
            } else {
                if (c != ',')
                    throw ParseError("expected ','", line_no, column);
                expect_cell = true;
            }
        }
        if (expect_cell)
            throw ParseError("row ends with a dangling ','", line_no, column);
        if (!rows.empty() && bits.size() != rows.front().width())
            throw ParseError("row width differs from the first row", line_no, column);
        rows.push_back(Generation::from_string(bits));
    }
    if (rows.empty())
        throw ParseError("CSV contains no rows", line_no == 0 ? 1 : line_no, 1);
    SpaceTimeDiagram d(rows.front());
    for (std::size_t t = 1; t < rows.size(); ++t)
        d.push_state(rows[t]);
    return d;
}

SpaceTimeDiagram import_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what(), 0, e.byte);
    }
    try {
        const auto width = j.at("width").get<std::size_t>();
        const auto steps = j.at("steps").get<std::size_t>();
        const auto boundary = boundary_from_string(j.at("boundary").get<std::string>());
        const auto& states = j.at("states");
        if (states.size() != steps + 1)
            throw std::invalid_argument("states must hold steps + 1 rows");

        const bool with_intensities = j.contains("intensities");
        std::vector<std::vector<double>> intensities;
        if (with_intensities) {
            intensities = j.at("intensities").get<std::vector<std::vector<double>>>();
            if (intensities.size() != steps)
                throw std::invalid_argument("intensities must hold one row per step");
        }

        SpaceTimeDiagram d(
            Generation::from_string(states.at(0).get<std::string>(), boundary));
        if (d.width() != width)
            throw std::invalid_argument("state row width differs from the width field");
        for (std::size_t t = 1; t <= steps; ++t) {
            auto row = Generation::from_string(states.at(t).get<std::string>(), boundary);
            if (with_intensities) {
                if (intensities[t - 1].size() != width)
                    throw std::invalid_argument("intensity row width mismatch");
                d.push_state(std::move(row), std::move(intensities[t - 1]));
            } else {
                d.push_state(std::move(row));
            }
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad diagram JSON: ") + e.what(), 0, 0);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad diagram JSON: ") + e.what(), 0, 0);
    }
}

} // namespace

DiagramFormat format_from_string(std::string_view name) {
    const std::string lower = lowercase(name);
    if (lower == "pgm")
        return DiagramFormat::Pgm;
    if (lower == "csv")
        return DiagramFormat::Csv;
    if (lower == "json")
        return DiagramFormat::Json;
    throw std::invalid_argument("unknown diagram format '" + std::string(name) +
                                "' (expected pgm, csv, or json)");
}

DiagramFormat format_from_path(const std::filesystem::path& path) {
    auto ext = lowercase(path.extension().string());
    if (!ext.empty() && ext.front() == '.')
        ext.erase(ext.begin());
    if (ext == "jsonl")
        ext = "json";
    return format_from_string(ext);
}

const char* to_string(DiagramFormat f) noexcept {
    switch (f) {
    case DiagramFormat::Pgm: return "pgm";
    case DiagramFormat::Csv: return "csv";
    case DiagramFormat::Json: return "json";
    }
    return "?";
}

const char* extension(DiagramFormat f) noexcept {
    switch (f) {
    case DiagramFormat::Pgm: return ".pgm";
    case DiagramFormat::Csv: return ".csv";
    case DiagramFormat::Json: return ".json";
    }
    return "";
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t offset)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", offset " +
                         std::to_string(offset) + ")"),
      line_(line), offset_(offset) {}

void export_diagram(std::ostream& out, const SpaceTimeDiagram& d, DiagramFormat format) {
    if (d.row_count() == 0)
        throw std::invalid_argument("cannot export an empty diagram");
    switch (format) {
    case DiagramFormat::Pgm: export_pgm(out, d); break;
    case DiagramFormat::Csv: export_csv(out, d); break;
    case DiagramFormat::Json: export_json(out, d); break;
    }
}

void export_diagram(const std::filesystem::path& path, const SpaceTimeDiagram& d,
                    DiagramFormat format) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    export_diagram(out, d, format);
    out.flush();
    if (!out)
        throw std::runtime_error("write to '" + path.string() + "' failed");
}

SpaceTimeDiagram import_diagram(std::istream& in, DiagramFormat format) {
    switch (format) {
    case DiagramFormat::Pgm: return import_pgm(in);
    case DiagramFormat::Csv: return import_csv(in);
    case DiagramFormat::Json: return import_json(in);
    }
    throw std::invalid_argument("unknown diagram format");
}

SpaceTimeDiagram import_diagram(const std::filesystem::path& path, DiagramFormat format) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    return import_diagram(in, format);
}

SpaceTimeDiagram import_diagram(const std::filesystem::path& path) {
    return import_diagram(path, format_from_path(path));
}

} // namespace peca
