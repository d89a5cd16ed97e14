#include "pnc/report_io.hpp"

#include <charconv>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "pnc/errors.hpp"

namespace pnc {

std::string constellation_json(const Constellation& c) {
  nlohmann::json j;
  j["M"] = c.size();
  j["points"] = nlohmann::json::array();
  for (const auto& p : c.points()) j["points"].push_back({p.real(), p.imag()});
  j["labels"] = c.labels();
  return j.dump(2) + "\n";
}

std::string singular_csv(std::span<const SingularState> states) {
  std::string out = "s_re,s_im,magnitude,phase,dominance,n_generators\n";
  for (const auto& s : states) {
    out += fmt::format("{},{},{},{},{},{}\n", s.value.real(), s.value.imag(), s.magnitude(),
                       s.phase(), s.dominance, s.generators.size());
  }
  return out;
}

std::string map_catalog_json(const MapLibrary& lib) {
  nlohmann::json arr = nlohmann::json::array();
  auto emit = [&](const ClusterMap& m, const Complex* state) {
    nlohmann::json e;
    e["singular_state"] = state ? nlohmann::json{state->real(), state->imag()} : nlohmann::json();
    nlohmann::json rows = nlohmann::json::array();
    for (int a = 0; a < m.order(); ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int b = 0; b < m.order(); ++b) row.push_back(m.label(a, b));
      rows.push_back(row);
    }
    e["labels"] = rows;
    e["n_clusters"] = m.clusters();
    arr.push_back(e);
  };
  for (const auto& entry : lib.entries()) emit(entry.map, &entry.state.value);
  emit(lib.fallback(), nullptr);
  return arr.dump(2) + "\n";
}

std::string raster_csv(const Raster& raster) {
  std::string out = "re,im,map_id\n";
  out.reserve(out.size() + raster.ids.size() * 24);
  for (int k = 0; k < raster.resolution; ++k)
    for (int i = 0; i < raster.resolution; ++i)
      fmt::format_to(std::back_inserter(out), "{},{},{}\n", raster.re_at(i), raster.im_at(k),
                     raster.id_at(i, k));
  return out;
}

std::string delta_csv(std::span<const DeltaEstimate> deltas) {
  std::string out = "s_re,s_im,delta\n";
  for (const auto& d : deltas)
    out += fmt::format("{},{},{}\n", d.state.real(), d.state.imag(), d.delta);
  return out;
}

std::string ser_csv_header() { return "scheme,snr_db,trials,errors_A,errors_B,errors_union,ser,stderr\n"; }

std::string ser_csv_rows(std::string_view scheme, std::span<const SerEstimate> rows) {
  std::string out;
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", scheme, r.snr_db, r.trials, r.errors_a,
                       r.errors_b, r.errors_union, r.ser, r.std_error);
  }
  return out;
}

std::string bound_csv_header() { return "scheme,snr_db,ma_cross,ma_nonremovable,ma_unremoved,bc,total\n"; }

std::string bound_csv_row(std::string_view scheme, double snr_db, const BoundReport& r) {
  return fmt::format("{},{},{},{},{},{},{}\n", scheme, snr_db, r.ma_cross, r.ma_nonremovable,
                     r.ma_unremoved, r.bc, r.total);
}

namespace {

template <typename T>
T parse_number(std::string_view field) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw InvalidArgument("malformed CSV field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<SerEstimate> parse_ser_csv(std::string_view text, std::string_view scheme) {
  std::vector<SerEstimate> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.starts_with("scheme,")) continue;
    std::vector<std::string_view> f;
    std::string_view rest = line;
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
      f.push_back(rest.substr(0, pos));
    f.push_back(rest);
    if (f.size() != 8) throw InvalidArgument("SER CSV rows need 8 columns: " + line);
    if (f[0] != scheme) continue;
    SerEstimate e;
    e.snr_db = parse_number<double>(f[1]);
    e.trials = parse_number<std::uint64_t>(f[2]);
    e.errors_a = parse_number<std::uint64_t>(f[3]);
    e.errors_b = parse_number<std::uint64_t>(f[4]);
    e.errors_union = parse_number<std::uint64_t>(f[5]);
    e.ser = parse_number<double>(f[6]);
    e.std_error = parse_number<double>(f[7]);
    out.push_back(e);
  }
  return out;
}

}  // namespace pnc
