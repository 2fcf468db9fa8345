#ifndef TVLAB_IO_HPP
#define TVLAB_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tvlab/errors.hpp"
#include "tvlab/kernel.hpp"
#include "tvlab/rational.hpp"

// Point files.  CSV: one point per row, coordinates as exact rationals
// ("5", "-7/3"), '#' starts a comment.  JSON: {"dim": d, "points": [[...]]}
// with coordinates as strings, so nothing is rounded on the way through.

namespace tvlab {

namespace io_detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return s.substr(b, e - b);
}

} // namespace io_detail

inline std::vector<ExactPoint> read_points_csv(std::istream& in) {
    std::vector<ExactPoint> points;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = io_detail::trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        std::vector<Rational> coords;
        std::stringstream row(stripped);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            const std::string value = io_detail::trim(cell);
            if (value.empty()) {
                throw ParseError("line " + std::to_string(lineno) + ": empty coordinate");
            }
            try {
                coords.push_back(rational_from_string(value));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (coords.empty()) {
            throw ParseError("line " + std::to_string(lineno) + ": no coordinates");
        }
        if (!points.empty() && points.front().dim() != static_cast<int>(coords.size())) {
            throw ParseError("line " + std::to_string(lineno) + ": inconsistent dimension");
        }
        points.emplace_back(std::move(coords));
    }
    return points;
}

inline void write_points_csv(std::ostream& out, const std::vector<ExactPoint>& points) {
    for (const ExactPoint& p : points) {
        for (int i = 0; i < p.dim(); ++i) {
            if (i) out << ',';
            out << to_string(p[i]);
        }
        out << '\n';
    }
}

inline std::vector<ExactPoint> read_points_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("points")) {
        throw ParseError("point JSON must be an object with 'dim' and 'points'");
    }
    const int dim = j.at("dim").get<int>();
    std::vector<ExactPoint> points;
    for (const auto& row : j.at("points")) {
        std::vector<Rational> coords;
        for (const auto& cell : row) {
            coords.push_back(rational_from_string(cell.get<std::string>()));
        }
        if (static_cast<int>(coords.size()) != dim) {
            throw ParseError("point JSON row does not match 'dim'");
        }
        points.emplace_back(std::move(coords));
    }
    return points;
}

inline void write_points_json(std::ostream& out, const std::vector<ExactPoint>& points) {
    nlohmann::json j;
    j["dim"] = points.empty() ? 0 : points.front().dim();
    auto rows = nlohmann::json::array();
    for (const ExactPoint& p : points) {
        auto row = nlohmann::json::array();
        for (int i = 0; i < p.dim(); ++i) row.push_back(to_string(p[i]));
        rows.push_back(std::move(row));
    }
    j["points"] = std::move(rows);
    out << j.dump(2) << '\n';
}

// Reads a point file, picking the format from the extension.
inline std::vector<ExactPoint> load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open points file '" + path + "'");
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".csv") return read_points_csv(in);
    if (ext == ".json") return read_points_json(in);
    throw ParseError("unsupported points file extension '" + ext + "' (expected .csv or .json)");
}

inline void save_points(const std::string& path, const std::vector<ExactPoint>& points) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write points file '" + path + "'");
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".csv") {
        write_points_csv(out, points);
    } else if (ext == ".json") {
        write_points_json(out, points);
    } else {
        throw ParseError("unsupported points file extension '" + ext + "' (expected .csv or .json)");
    }
}

inline PointSequence load_sequence(const std::string& path) {
    auto points = load_points(path);
    if (points.empty()) throw ParseError("points file '" + path + "' is empty");
    const int dim = points.front().dim();
    return PointSequence(dim, std::move(points));
}

} // namespace tvlab

#endif
