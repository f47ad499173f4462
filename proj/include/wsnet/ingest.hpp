#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wsnet/graph.hpp"

namespace wsnet {

// Load report for one edge-list file.
struct EdgeListData {
    DegreeHistogram histogram;
    std::uint64_t node_count = 0; // distinct ids seen
    std::uint64_t edge_count = 0; // accepted lines, self-loops included
    std::uint64_t self_loop_count = 0;
    std::int64_t min_id = 0; // lowest id seen, distinguishes 0- vs 1-based files
    std::int64_t max_id = 0;
};

// Whitespace-separated "u v" lines; '%'/'#' lines and blank lines skipped;
// trailing fields ignored. Directed inputs symmetrize implicitly since each
// line raises both endpoint degrees. Self-loops add 2 to one node's degree
// and are flagged in the report. Throws DataError naming the offending line.
EdgeListData parse_edge_list(std::istream& in);

// round(m/(n-1)) - 1, clamped at 0, in exact integer arithmetic. n >= 2.
std::uint64_t estimate_alpha(std::uint64_t nodes, std::uint64_t edges);

struct DistributionRow {
    std::uint64_t k = 0;
    std::uint64_t count = 0;
    double pk = 0.0;
    double cdf = 0.0;
};

std::vector<DistributionRow> distribution_rows(const DegreeHistogram& hist);

// CSV with header "k,count,pk,cdf", rows ascending in k, floats at 6
// significant digits. Throws IoError when the stream fails.
void export_distribution(const DegreeHistogram& hist, std::ostream& out);

// Inverse of export_distribution; counts round-trip exactly.
DegreeHistogram import_distribution(std::istream& in);

// Sup distance between the two degree CDFs (P(degree <= k)) over the union
// of observed degrees.
double compare_cdf(const DegreeHistogram& a, const DegreeHistogram& b);

// "%.6g" with a decimal point forced onto integral values, so 1 prints as
// "1.0". Shared by every CSV writer.
std::string format_float6(double x);

} // namespace wsnet
