#pragma once

#include <string>
#include <vector>

#include "fracspec/fracpde.hpp"
#include "fracspec/types.hpp"

namespace fracspec {

// CSV with header "t,value", 17 significant digits.
void write_timeseries_csv(const std::string& path, const TimeSeries& ts);

// Throws std::runtime_error with the offending line number on bad input.
TimeSeries read_timeseries_csv(const std::string& path);

// Snapshot CSV: header "x,t=<t0>,t=<t1>,...", one row per grid point.
void write_snapshots_csv(const std::string& path, double length,
                         const std::vector<FieldSnapshot>& snaps);

}  // namespace fracspec
