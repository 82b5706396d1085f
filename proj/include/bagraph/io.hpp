#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "bagraph/analysis.hpp"
#include "bagraph/experiments.hpp"
#include "bagraph/graph.hpp"
#include "bagraph/model.hpp"

namespace bagraph {

/// Malformed edge-list input; carries the 1-based offending line.
class EdgeListError : public ParameterError {
public:
    EdgeListError(std::size_t line, const std::string& what)
        : ParameterError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Shortest decimal that round-trips to the same double.
std::string format_real(double value);

/// Header "u,v", one canonical edge per LF-terminated row.
void write_edge_list(std::ostream& os, const UndirectedGraph& graph);

/// Parses the edge-list format. Rows may appear in either orientation;
/// self-loops, duplicates, ids >= n and malformed rows are rejected.
UndirectedGraph read_edge_list(std::istream& is, std::uint32_t n);

nlohmann::ordered_json to_json(const AnalysisReport& report);

inline constexpr const char* sweep_csv_header =
    "n,k,trials,master_seed,frac_connected,ci_low,ci_high,mean_isolated,frac_has_isolated,mean_degree,"
    "mean_min_degree";

void write_sweep_csv(std::ostream& os, std::span<const SweepCell> cells);

}  // namespace bagraph
