#pragma once

// Serialization: monitor CSV, verification report JSON, bound tables, and a
// little-endian binary snapshot format for full states.
//
// Snapshot layout (all integers and floats little-endian):
//   8 bytes  magic "MHRSNAP1"
//   u64      dim (1..3)
//   u64*dim  cells per axis
//   f64*dim  box lengths per axis
//   f64      time
//   f64*N    u, v, w, rho in row-major order (N = product of cells)

#include <filesystem>
#include <ostream>
#include <string>

#include <mhr/bounds.hpp>
#include <mhr/grid.hpp>
#include <mhr/monitor.hpp>
#include <mhr/verify.hpp>

namespace mhr {

// Fixed header followed by one row per entry, every value at full double
// precision (round-trippable).
void write_monitor_csv(const MonitorSeries& m, std::ostream& out);
void write_monitor_csv(const MonitorSeries& m, const std::filesystem::path& path);
extern const char* const kMonitorCsvHeader;

[[nodiscard]] std::string report_json(const VerificationReport& report);
void write_report(const VerificationReport& report, const std::filesystem::path& path);

// Flat "name = value" lines, one bound constant per line.
[[nodiscard]] std::string bounds_text(const BoundSet& bs);
[[nodiscard]] std::string bounds_json(const BoundSet& bs);

void write_snapshot(const State& s, const Grid& g, const std::filesystem::path& path);

struct SnapshotData {
  State state;
  Grid grid;
};

// Throws std::runtime_error on unreadable files, bad magic, implausible
// headers, or payloads whose size does not match the header.
[[nodiscard]] SnapshotData read_snapshot(const std::filesystem::path& path);

}  // namespace mhr
