#include "peca/reports.hpp"

#include "json.hpp"

namespace peca {

namespace {

nlohmann::json track_json(const GliderTrack& track) {
    nlohmann::json j;
    j["role"] = to_string(track.role);
    j["t_start"] = track.t_start;
    j["t_end"] = track.t_end;
    j["positions"] = track.positions;
    j["displacement"] = track.displacement;
    j["period"] = track.period;
    j["velocity"] = track.velocity;
    return j;
}

} // namespace

std::string to_json_string(const FractalReport& report) {
    nlohmann::json j;
    j["box_sizes"] = report.box_sizes;
    j["counts"] = report.counts;
    j["dimension"] = report.dimension;
    j["fit_r2"] = report.fit_r2;
    return j.dump(2);
}

std::string to_json_string(const DamageReport& report) {
    nlohmann::json j;
    auto frontiers = nlohmann::json::array();
    for (const auto& sample : report.frontiers) {
        frontiers.push_back(
            {{"step", sample.step}, {"left", sample.left}, {"right", sample.right}});
    }
    j["frontiers"] = std::move(frontiers);
    j["lambda_left"] = report.lambda_left;
    j["lambda_right"] = report.lambda_right;
    j["steps"] = report.difference.steps();
    j["width"] = report.difference.width();
    return j.dump(2);
}

std::string to_json_string(const RandomnessReport& report) {
    nlohmann::json j;
    j["n_bits"] = report.n_bits;
    j["monobit_z"] = report.monobit_z;
    j["lag1_autocorrelation"] = report.lag1_autocorrelation;
    j["runs_z"] = report.runs_z;
    j["block_chi2_pvalue"] = report.block_chi2_pvalue;
    if (report.period_found)
        j["period_found"] = *report.period_found;
    else
        j["period_found"] = nullptr;
    return j.dump(2);
}

std::string to_json_string(const EtherTiling& ether) {
    nlohmann::json j;
    j["spatial_period"] = ether.spatial_period;
    j["temporal_period"] = ether.temporal_period;
    auto rows = nlohmann::json::array();
    for (std::size_t t = 0; t < ether.temporal_period; ++t) {
        std::string row(ether.spatial_period, '0');
        for (std::size_t i = 0; i < ether.spatial_period; ++i)
            if (ether.tile[t * ether.spatial_period + i])
                row[i] = '1';
        rows.push_back(row);
    }
    j["tile"] = std::move(rows);
    j["coverage"] = ether.coverage;
    return j.dump(2);
}

std::string to_json_string(const CompilationResult& result) {
    nlohmann::json j;
    j["rule_number"] = result.rule_number;
    j["feasible"] = result.feasible;
    j["margin"] = result.margin;
    if (result.config) {
        j["weights"] = {result.config->weights.left, result.config->weights.center,
                        result.config->weights.right};
        j["threshold"] = result.config->threshold;
    } else {
        j["weights"] = nullptr;
        j["threshold"] = nullptr;
    }
    return j.dump(2);
}

std::string to_json_string(const ThroughputReport& report) {
    nlohmann::json j;
    j["modeled_updates_per_second"] = report.modeled_updates_per_second;
    j["emulator_updates_per_second"] = report.emulator_updates_per_second;
    return j.dump(2);
}

std::string events_json_string(std::span<const GliderEvent> events) {
    auto arr = nlohmann::json::array();
    for (const auto& event : events) {
        nlohmann::json j;
        j["kind"] = to_string(event.kind);
        j["t_start"] = event.t_start;
        j["t_end"] = event.t_end;
        auto tracks = nlohmann::json::array();
        for (const auto& track : event.tracks)
            tracks.push_back(track_json(track));
        j["tracks"] = std::move(tracks);
        if (event.phase_shift)
            j["phase_shift"] = *event.phase_shift;
        else
            j["phase_shift"] = nullptr;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

} // namespace peca
