#include "fracspec/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fracspec {

namespace {

double parse_double(const std::string& tok, std::size_t line_no) {
    double v = 0.0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw std::runtime_error("CSV parse error at line " + std::to_string(line_no) +
                                 ": bad number '" + tok + "'");
    return v;
}

}  // namespace

void write_timeseries_csv(const std::string& path, const TimeSeries& ts) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "t,value\n";
    char buf[64];
    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", ts.dt * static_cast<double>(i),
                      ts.values[i]);
        out << buf;
    }
}

TimeSeries read_timeseries_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string line;
    std::size_t line_no = 0;
    TimeSeries ts;
    std::vector<double> times;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && (line == "t,value" || line == "x,value")) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("CSV parse error at line " + std::to_string(line_no) +
                                     ": expected 't,value'");
        times.push_back(parse_double(line.substr(0, comma), line_no));
        ts.values.push_back(parse_double(line.substr(comma + 1), line_no));
    }
    if (ts.values.empty()) throw std::runtime_error("empty input: " + path);
    ts.dt = times.size() > 1 ? times[1] - times[0] : 1.0;
    if (!(ts.dt > 0.0)) throw std::runtime_error("CSV time column must be increasing");
    return ts;
}

void write_snapshots_csv(const std::string& path, double length,
                         const std::vector<FieldSnapshot>& snaps) {
    if (snaps.empty()) throw std::invalid_argument("write_snapshots_csv: no snapshots");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    char buf[64];
    out << "x";
    for (const auto& s : snaps) {
        std::snprintf(buf, sizeof(buf), ",t=%.17g", s.t);
        out << buf;
    }
    out << "\n";
    const std::size_t n = snaps.front().values.size();
    const double dx = length / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", dx * static_cast<double>(i));
        out << buf;
        for (const auto& s : snaps) {
            std::snprintf(buf, sizeof(buf), ",%.17g", s.values[i]);
            out << buf;
        }
        out << "\n";
    }
}

}  // namespace fracspec
