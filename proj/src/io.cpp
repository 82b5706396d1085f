#include "bagraph/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <string_view>
#include <vector>

namespace bagraph {

std::string format_real(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

void write_edge_list(std::ostream& os, const UndirectedGraph& graph) {
    os << "u,v\n";
    for (const auto& [u, v] : graph.edges()) os << u << ',' << v << '\n';
}

namespace {

bool parse_id(std::string_view field, std::uint32_t& out) {
    if (field.empty()) return false;
    const auto* end = field.data() + field.size();
    const auto result = std::from_chars(field.data(), end, out);
    return result.ec == std::errc{} && result.ptr == end;
}

}  // namespace

UndirectedGraph read_edge_list(std::istream& is, std::uint32_t n) {
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!header_seen) {
            if (line != "u,v") throw EdgeListError(line_no, "expected header 'u,v'");
            header_seen = true;
            continue;
        }
        if (line.empty()) throw EdgeListError(line_no, "empty row");
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw EdgeListError(line_no, "expected 'u,v', got '" + line + "'");
        std::uint32_t u = 0, v = 0;
        if (!parse_id(std::string_view(line).substr(0, comma), u) ||
            !parse_id(std::string_view(line).substr(comma + 1), v))
            throw EdgeListError(line_no, "malformed vertex id in '" + line + "'");
        if (u == v) throw EdgeListError(line_no, "self-loop " + line);
        if (u >= n || v >= n) throw EdgeListError(line_no, "vertex id out of range for n=" + std::to_string(n));
        const Edge e = u < v ? Edge{u, v} : Edge{v, u};
        if (!seen.insert(e).second) throw EdgeListError(line_no, "duplicate edge " + line);
        edges.push_back(e);
    }
    if (!header_seen) throw EdgeListError(1, "missing header 'u,v'");
    return UndirectedGraph(n, std::move(edges));
}

nlohmann::ordered_json to_json(const AnalysisReport& report) {
    nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
    for (const auto& [degree, count] : report.degree_histogram) histogram[std::to_string(degree)] = count;
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["edge_count"] = report.edge_count;
    j["degree_histogram"] = histogram;
    j["min_degree"] = report.min_degree;
    j["max_degree"] = report.max_degree;
    j["mean_degree"] = report.mean_degree;
    j["isolated_count"] = report.isolated_count;
    j["component_sizes"] = report.component_sizes;
    j["is_connected"] = report.is_connected;
    return j;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepCell> cells) {
    os << sweep_csv_header << '\n';
    for (const auto& c : cells) {
        os << c.n << ',' << c.k << ',' << c.trials << ',' << c.master_seed << ',' << format_real(c.frac_connected)
           << ',' << format_real(c.wilson_ci_low) << ',' << format_real(c.wilson_ci_high) << ','
           << format_real(c.mean_isolated) << ',' << format_real(c.frac_has_isolated) << ','
           << format_real(c.mean_degree) << ',' << format_real(c.mean_min_degree) << '\n';
    }
}

}  // namespace bagraph
