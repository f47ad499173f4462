#include "wsnet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "wsnet/errors.hpp"

namespace wsnet {

namespace {

bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\r';
}

// One whitespace-delimited integer token; leaves p just past the token.
bool parse_id(const char*& p, const char* end, std::int64_t& out) {
    while (p < end && is_blank(*p))
        ++p;
    const auto [ptr, ec] = std::from_chars(p, end, out);
    if (ec != std::errc() || ptr == p)
        return false;
    if (ptr < end && !is_blank(*ptr))
        return false;
    p = ptr;
    return true;
}

} // namespace

EdgeListData parse_edge_list(std::istream& in) {
    EdgeListData data;
    std::unordered_map<std::int64_t, std::uint64_t> degree;
    degree.reserve(1 << 16);
    std::string line;
    std::size_t line_no = 0;
    bool saw_id = false;
    while (std::getline(in, line)) {
        ++line_no;
        const char* p = line.data();
        const char* end = p + line.size();
        while (p < end && is_blank(*p))
            ++p;
        if (p == end || *p == '%' || *p == '#')
            continue;
        std::int64_t u = 0;
        std::int64_t v = 0;
        if (!parse_id(p, end, u) || !parse_id(p, end, v))
            throw DataError("edge list line " + std::to_string(line_no) +
                            ": expected two integer node ids");
        ++data.edge_count;
        if (u == v) {
            ++data.self_loop_count;
            degree[u] += 2;
        } else {
            degree[u] += 1;
            degree[v] += 1;
        }
        if (!saw_id) {
            data.min_id = std::min(u, v);
            data.max_id = std::max(u, v);
            saw_id = true;
        } else {
            data.min_id = std::min({data.min_id, u, v});
            data.max_id = std::max({data.max_id, u, v});
        }
    }
    if (in.bad())
        throw IoError("edge list read failed");
    if (degree.empty())
        throw DataError("edge list contains no edges");
    data.node_count = degree.size();
    for (const auto& [id, d] : degree)
        data.histogram.add(d);
    return data;
}

std::uint64_t estimate_alpha(std::uint64_t nodes, std::uint64_t edges) {
    if (nodes < 2)
        throw DataError("alpha estimate needs at least two nodes");
    const std::uint64_t den = nodes - 1;
    const std::uint64_t q = edges / den;
    const std::uint64_t r = edges % den;
    const std::uint64_t rounded = q + (r >= den - r ? 1 : 0); // round half up
    return rounded == 0 ? 0 : rounded - 1;
}

std::vector<DistributionRow> distribution_rows(const DegreeHistogram& hist) {
    if (hist.total_nodes() == 0)
        throw DataError("empty degree histogram");
    std::vector<DistributionRow> rows;
    rows.reserve(hist.counts().size());
    const double total = static_cast<double>(hist.total_nodes());
    std::uint64_t running = 0;
    for (const auto& [k, c] : hist.counts()) {
        running += c;
        // cdf from the integer running count, so the last row is exactly 1
        rows.push_back({k, c, static_cast<double>(c) / total,
                        static_cast<double>(running) / total});
    }
    return rows;
}

std::string format_float6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    std::string s(buf);
    if (s.find_first_of(".eEni") == std::string::npos)
        s += ".0";
    return s;
}

void export_distribution(const DegreeHistogram& hist, std::ostream& out) {
    out << "k,count,pk,cdf\n";
    for (const DistributionRow& row : distribution_rows(hist))
        out << row.k << ',' << row.count << ',' << format_float6(row.pk) << ','
            << format_float6(row.cdf) << '\n';
    if (!out)
        throw IoError("distribution write failed");
}

DegreeHistogram import_distribution(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw DataError("distribution file is empty");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "k,count,pk,cdf")
        throw DataError("distribution file must start with the header k,count,pk,cdf");
    DegreeHistogram hist;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const char* p = line.data();
        const char* end = p + line.size();
        std::uint64_t k = 0;
        std::uint64_t count = 0;
        const auto first = std::from_chars(p, end, k);
        if (first.ec != std::errc() || first.ptr == end || *first.ptr != ',')
            throw DataError("distribution line " + std::to_string(line_no) +
                            ": expected k,count,pk,cdf");
        const auto second = std::from_chars(first.ptr + 1, end, count);
        if (second.ec != std::errc() || second.ptr == end || *second.ptr != ',')
            throw DataError("distribution line " + std::to_string(line_no) +
                            ": expected k,count,pk,cdf");
        hist.add(k, count);
    }
    if (in.bad())
        throw IoError("distribution read failed");
    if (hist.empty())
        throw DataError("distribution file has no rows");
    return hist;
}

double compare_cdf(const DegreeHistogram& a, const DegreeHistogram& b) {
    if (a.total_nodes() == 0 || b.total_nodes() == 0)
        throw DataError("cdf comparison needs two nonempty histograms");
    const double na = static_cast<double>(a.total_nodes());
    const double nb = static_cast<double>(b.total_nodes());
    auto ia = a.counts().begin();
    auto ib = b.counts().begin();
    std::uint64_t ca = 0;
    std::uint64_t cb = 0;
    double worst = 0.0;
    while (ia != a.counts().end() || ib != b.counts().end()) {
        std::uint64_t k;
        if (ib == b.counts().end())
            k = ia->first;
        else if (ia == a.counts().end())
            k = ib->first;
        else
            k = std::min(ia->first, ib->first);
        if (ia != a.counts().end() && ia->first == k) {
            ca += ia->second;
            ++ia;
        }
        if (ib != b.counts().end() && ib->first == k) {
            cb += ib->second;
            ++ib;
        }
        worst = std::max(worst,
                         std::abs(static_cast<double>(ca) / na -
                                  static_cast<double>(cb) / nb));
    }
    return worst;
}

} // namespace wsnet
