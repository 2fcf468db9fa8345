#ifndef TVLAB_REPORTS_HPP
#define TVLAB_REPORTS_HPP

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tvlab/convex.hpp"
#include "tvlab/kernel.hpp"
#include "tvlab/predicates.hpp"
#include "tvlab/stair.hpp"
#include "tvlab/stretched.hpp"
#include "tvlab/types.hpp"
#include "tvlab/version.hpp"

// JSON report builders.  nlohmann::json keeps object keys sorted, so a report
// serializes byte-identically for identical inputs; reports double as golden
// test fixtures.  Coordinates are emitted as exact rational strings.

namespace tvlab {
namespace reports {

using nlohmann::json;

inline json envelope(const std::string& command, json parameters) {
    json j;
    j["command"] = command;
    j["parameters"] = std::move(parameters);
    j["schema_version"] = kReportSchemaVersion;
    j["artifact_version"] = kVersion;
    return j;
}

inline json point_json(const ExactPoint& p) {
    auto row = json::array();
    for (int i = 0; i < p.dim(); ++i) row.push_back(to_string(p[i]));
    return row;
}

inline json points_json(const std::vector<ExactPoint>& pts) {
    auto rows = json::array();
    for (const ExactPoint& p : pts) rows.push_back(point_json(p));
    return rows;
}

inline json partition_json(const std::vector<std::vector<int>>& parts) {
    auto out = json::array();
    for (const auto& part : parts) out.push_back(part);
    return out;
}

inline json certificate_json(const TverbergCertificate& cert) {
    json j;
    j["encoding"] = encode(cert.type);
    j["parts"] = partition_json(cert.type.parts());
    j["point"] = point_json(cert.tverberg_point);
    auto coeffs = json::array();
    for (const Rational& c : cert.coefficients) coeffs.push_back(to_string(c));
    j["coefficients"] = std::move(coeffs);
    return j;
}

inline json census_333_json(const Census333& census) {
    json j;
    j["total"] = census.total;
    j["interlacing"] = census.interlacing;
    j["colorful"] = census.colorful;
    j["consecutive_filtered"] = census.consecutive_filtered;
    j["residual"] = census.residual;
    j["interlacing_list"] = census.interlacing_list;
    j["residual_list"] = census.residual_list;
    auto parts = json::array();
    for (const std::string& enc : census.residual_list) {
        parts.push_back(parts_notation(decode(enc, 3, 3)));
    }
    j["residual_parts"] = std::move(parts);
    return j;
}

inline json transference_json(const TransferenceReport& report) {
    json j;
    j["d"] = report.d;
    j["r"] = report.r;
    j["partitions_checked"] = report.partitions_checked;
    j["euclidean_positive"] = report.euclidean_positive;
    j["stair_positive"] = report.stair_positive;
    j["agreed"] = report.agreed();
    j["positive_types"] = report.positive_types;
    auto bad = json::array();
    for (const auto& v : report.disagreements) {
        json d;
        d["partition"] = partition_json(v.partition);
        d["euclidean"] = v.euclidean;
        d["stair"] = v.stair;
        bad.push_back(std::move(d));
    }
    j["disagreements"] = std::move(bad);
    return j;
}

inline json sierksma_json(const SierksmaReport& report) {
    json j;
    j["d"] = report.d;
    j["r"] = report.r;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["side"] = report.side;
    j["expected"] = report.expected;
    j["constant"] = report.constant();
    auto dist = json::object();
    for (const auto& [count, times] : report.distribution) {
        dist[std::to_string(count)] = times;
    }
    j["distribution"] = std::move(dist);
    return j;
}

inline json stair_result_json(const StairTverbergResult& result) {
    json j;
    auto parts = json::array();
    for (const auto& partition : result.partitions) parts.push_back(partition_json(partition));
    j["partitions"] = std::move(parts);
    j["count"] = result.partitions.size();
    j["common_point"] = point_json(result.common_point);
    return j;
}

inline json closeness_json(const ClosenessReport& report) {
    json j;
    j["samples"] = report.samples;
    j["max_deviation"] = report.max_deviation;
    return j;
}

inline json scan_json(const ScanReport& report) {
    json j;
    j["predicate"] = report.predicate;
    j["family"] = report.family;
    j["dim"] = report.dim;
    j["seed"] = report.seed;
    j["min_n"] = report.min_n;
    j["max_n"] = report.max_n;
    j["budget"] = report.budget;
    j["instances_checked"] = report.instances_checked;
    j["falsified"] = report.falsified();
    if (report.counterexample) {
        json ce;
        ce["n"] = report.counterexample->n;
        ce["instance"] = report.counterexample->instance;
        ce["points"] = points_json(report.counterexample->points);
        j["counterexample"] = std::move(ce);
    }
    return j;
}

} // namespace reports
} // namespace tvlab

#endif
