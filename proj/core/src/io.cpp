#include <mhr/io.hpp>

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace mhr {

namespace {

using ordered_json = nlohmann::ordered_json;

// Full round-trip precision for every CSV value.
std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void store_u64(std::string& out, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

void store_f64(std::string& out, double x) { store_u64(out, std::bit_cast<std::uint64_t>(x)); }

std::uint64_t load_u64(const char* p) {
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i) {
    x |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  }
  return x;
}

double load_f64(const char* p) { return std::bit_cast<double>(load_u64(p)); }

constexpr char kMagic[8] = {'M', 'H', 'R', 'S', 'N', 'A', 'P', '1'};

ordered_json check_to_json(const CheckRecord& rec) {
  ordered_json jc;
  jc["name"] = rec.name;
  jc["predicted"] = rec.predicted;
  jc["observed"] = rec.observed;
  jc["margin"] = rec.margin;
  if (rec.entry_time) {
    jc["entry_time"] = *rec.entry_time;
  } else {
    jc["entry_time"] = nullptr;
  }
  jc["pass"] = rec.pass;
  jc["tol"] = rec.tol;
  ordered_json jconst = ordered_json::object();
  for (const auto& [name, value] : rec.constants) jconst[name] = value;
  jc["constants_used"] = jconst;
  return jc;
}

}  // namespace

const char* const kMonitorCsvHeader =
    "t,energy,l4u4,l6u6,linf_u,h1semi2_u,l2v,l2w,l2rho,sup_v,sup_w,sup_rho,h2surr_u";

void write_monitor_csv(const MonitorSeries& m, std::ostream& out) {
  out << kMonitorCsvHeader << '\n';
  for (const MonitorRow& r : m) {
    out << fmt(r.time) << ',' << fmt(r.energy) << ',' << fmt(r.l4_u4) << ',' << fmt(r.l6_u6)
        << ',' << fmt(r.linf_u) << ',' << fmt(r.h1semi2_u) << ',' << fmt(r.l2_v) << ','
        << fmt(r.l2_w) << ',' << fmt(r.l2_rho) << ',' << fmt(r.sup_v) << ',' << fmt(r.sup_w)
        << ',' << fmt(r.sup_rho) << ',' << fmt(r.h2surr_u) << '\n';
  }
}

void write_monitor_csv(const MonitorSeries& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open monitor output: " + path.string());
  write_monitor_csv(m, out);
  if (!out) throw std::runtime_error("failed writing monitor output: " + path.string());
}

std::string report_json(const VerificationReport& report) {
  ordered_json j;
  j["all_pass"] = report.all_pass();
  ordered_json checks = ordered_json::array();
  for (const CheckRecord& rec : report.checks) checks.push_back(check_to_json(rec));
  j["checks"] = checks;
  ordered_json notes = ordered_json::object();
  for (const auto& [key, text] : report.notes) notes[key] = text;
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

void write_report(const VerificationReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report output: " + path.string());
  out << report_json(report);
  if (!out) throw std::runtime_error("failed writing report output: " + path.string());
}

std::string bounds_text(const BoundSet& bs) {
  std::string out;
  const auto line = [&out](const char* name, double value) {
    out += name;
    out += " = ";
    out += fmt(value);
    out += '\n';
  };
  line("C1", bs.energy.C1);
  line("C2", bs.energy.C2);
  line("C3", bs.energy.C3);
  line("lambda", bs.energy.lambda);
  line("M", bs.energy.M);
  line("K", bs.energy.K);
  line("T0", bs.T0);
  line("C_ab", bs.l4.C_ab);
  line("C_b", bs.l4.C_b);
  line("Q", bs.l4.Q);
  line("L", bs.l4.L);
  line("R", bs.attractor.R);
  line("G", bs.attractor.G);
  line("Phi", bs.attractor.Phi);
  line("D", bs.attractor.D);
  line("H2_bound", bs.attractor.H2_bound);
  line("omega", bs.omega);
  line("b_norm", bs.b_norm);
  line("C_hat", bs.l4.C_hat);
  line("C_emb", bs.attractor.C_emb);
  return out;
}

std::string bounds_json(const BoundSet& bs) {
  ordered_json j;
  j["energy"] = {{"C1", bs.energy.C1}, {"C2", bs.energy.C2},       {"C3", bs.energy.C3},
                 {"lambda", bs.energy.lambda}, {"M", bs.energy.M}, {"K", bs.energy.K}};
  j["absorbing_entry_time"] = bs.T0;
  j["quartic"] = {{"C_ab", bs.l4.C_ab},
                  {"C_b", bs.l4.C_b},
                  {"Q", bs.l4.Q},
                  {"L", bs.l4.L},
                  {"C_hat", bs.l4.C_hat},
                  {"b_norm", bs.b_norm}};
  j["attractor"] = {{"R", bs.attractor.R},     {"G", bs.attractor.G},
                    {"Phi", bs.attractor.Phi}, {"D", bs.attractor.D},
                    {"H2_bound", bs.attractor.H2_bound}, {"C_emb", bs.attractor.C_emb}};
  j["omega"] = bs.omega;
  return j.dump(2) + "\n";
}

void write_snapshot(const State& s, const Grid& g, const std::filesystem::path& path) {
  const std::size_t n = g.size();
  if (s.u.size() != n || s.v.size() != n || s.w.size() != n || s.rho.size() != n) {
    throw std::invalid_argument("write_snapshot: state fields do not match the grid size");
  }
  std::string buf;
  buf.reserve(8 + 8 + 16 * g.dim + 8 + 32 * n);
  buf.append(kMagic, sizeof kMagic);
  store_u64(buf, static_cast<std::uint64_t>(g.dim));
  for (int a = 0; a < g.dim; ++a) store_u64(buf, static_cast<std::uint64_t>(g.cells[a]));
  for (int a = 0; a < g.dim; ++a) store_f64(buf, g.lengths[a]);
  store_f64(buf, s.time);
  for (const Field* f : {&s.u, &s.v, &s.w, &s.rho}) {
    for (double x : *f) store_f64(buf, x);
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open snapshot output: " + path.string());
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("failed writing snapshot: " + path.string());
}

SnapshotData read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open snapshot: " + path.string());
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  const auto fail = [&path](const std::string& why) {
    throw std::runtime_error("snapshot " + path.string() + ": " + why);
  };

  if (buf.size() < sizeof kMagic + 8) fail("truncated header");
  if (std::memcmp(buf.data(), kMagic, sizeof kMagic) != 0) fail("bad magic, not a snapshot file");

  std::size_t off = sizeof kMagic;
  const std::uint64_t dim = load_u64(buf.data() + off);
  off += 8;
  if (dim < 1 || dim > 3) fail("implausible dimension " + std::to_string(dim));
  if (buf.size() < off + 16 * dim + 8) fail("truncated header");

  std::vector<int> cells(dim);
  std::vector<double> lengths(dim);
  for (std::uint64_t a = 0; a < dim; ++a) {
    const std::uint64_t nc = load_u64(buf.data() + off);
    off += 8;
    if (nc < 1 || nc > (std::uint64_t{1} << 31)) {
      fail("implausible cell count " + std::to_string(nc));
    }
    cells[a] = static_cast<int>(nc);
  }
  for (std::uint64_t a = 0; a < dim; ++a) {
    lengths[a] = load_f64(buf.data() + off);
    off += 8;
  }

  SnapshotData snap;
  try {
    snap.grid = make_grid(lengths, cells);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }

  snap.state.time = load_f64(buf.data() + off);
  off += 8;

  const std::size_t n = snap.grid.size();
  const std::size_t expected = off + 32 * n;
  if (buf.size() < expected) fail("truncated field payload");
  if (buf.size() > expected) fail("trailing bytes after field payload");

  Field* fields[] = {&snap.state.u, &snap.state.v, &snap.state.w, &snap.state.rho};
  for (Field* f : fields) {
    f->resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      (*f)[i] = load_f64(buf.data() + off);
      off += 8;
    }
  }
  return snap;
}

}  // namespace mhr
