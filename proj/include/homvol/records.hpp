#pragma once

// Run records: one serialisable row per computed quantity, with JSON and CSV
// encodings that parse back to value-identical records, plus a small
// markdown table renderer for human-readable output.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "homvol/estimate.hpp"
#include "homvol/scales.hpp"
#include "homvol/version.hpp"

namespace homvol {

struct RunRecord {
  std::string quantity;  // domain_volume | surface_volume | ratio | acceptance_volume
  std::string scale;     // rd | rr | or
  std::optional<double> p;            // probability bound, for geometric quantities
  std::optional<std::int64_t> n;      // per-group size, for acceptance volumes
  std::string method;                 // closed | mc | quad
  double estimate = 0.0;
  std::optional<double> std_error;    // present exactly for Monte Carlo results
  std::uint64_t samples_or_nodes = 1;
  std::optional<std::uint64_t> seed;  // present exactly for Monte Carlo results
  std::optional<double> alpha;        // test level, for acceptance volumes
  std::string tool_version;

  bool operator==(const RunRecord&) const = default;
};

inline RunRecord make_record(std::string quantity, EffectScale s, std::optional<double> p,
                             std::optional<std::int64_t> n, const VolumeEstimate& est,
                             std::optional<double> alpha = std::nullopt) {
  RunRecord rec;
  rec.quantity = std::move(quantity);
  rec.scale = scale_token(s);
  rec.p = p;
  rec.n = n;
  rec.method = method_token(est.method);
  rec.estimate = est.value;
  rec.std_error = est.std_error;
  rec.samples_or_nodes = est.samples_or_nodes;
  rec.seed = est.seed;
  rec.alpha = alpha;
  rec.tool_version = kVersion;
  return rec;
}

// Every record carries the tool version; every stochastic record carries a
// standard error and the seed that reproduces it.
inline void validate_record(const RunRecord& rec) {
  if (rec.tool_version.empty()) {
    throw std::invalid_argument("run record: missing tool version");
  }
  if (rec.method == "mc" && (!rec.std_error || !rec.seed)) {
    throw std::invalid_argument("run record: stochastic result lacks std_error or seed");
  }
}

inline nlohmann::json record_to_json(const RunRecord& rec) {
  nlohmann::json j;
  j["quantity"] = rec.quantity;
  j["scale"] = rec.scale;
  if (rec.p) j["p"] = *rec.p;
  if (rec.n) j["n"] = *rec.n;
  j["method"] = rec.method;
  j["estimate"] = rec.estimate;
  if (rec.std_error) j["std_error"] = *rec.std_error;
  j["samples_or_nodes"] = rec.samples_or_nodes;
  if (rec.seed) j["seed"] = *rec.seed;
  if (rec.alpha) j["alpha"] = *rec.alpha;
  j["tool_version"] = rec.tool_version;
  return j;
}

inline RunRecord record_from_json(const nlohmann::json& j) {
  RunRecord rec;
  rec.quantity = j.at("quantity").get<std::string>();
  rec.scale = j.at("scale").get<std::string>();
  if (j.contains("p")) rec.p = j.at("p").get<double>();
  if (j.contains("n")) rec.n = j.at("n").get<std::int64_t>();
  rec.method = j.at("method").get<std::string>();
  rec.estimate = j.at("estimate").get<double>();
  if (j.contains("std_error")) rec.std_error = j.at("std_error").get<double>();
  rec.samples_or_nodes = j.at("samples_or_nodes").get<std::uint64_t>();
  if (j.contains("seed")) rec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("alpha")) rec.alpha = j.at("alpha").get<double>();
  rec.tool_version = j.at("tool_version").get<std::string>();
  return rec;
}

inline std::string to_json(const std::vector<RunRecord>& recs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const RunRecord& rec : recs) arr.push_back(record_to_json(rec));
  return arr.dump(2) + "\n";
}

inline std::vector<RunRecord> records_from_json(const std::string& text) {
  const nlohmann::json arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("records_from_json: expected an array");
  std::vector<RunRecord> recs;
  recs.reserve(arr.size());
  for (const nlohmann::json& j : arr) recs.push_back(record_from_json(j));
  return recs;
}

namespace detail {

// Shortest decimal form that parses back to the identical double.
inline std::string round_trip_double(double v) {
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::stod(buf) == v) break;
  }
  return buf;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace detail

inline constexpr const char* kCsvHeader =
    "quantity,scale,p,n,method,estimate,std_error,samples_or_nodes,seed,alpha,tool_version";

inline std::string to_csv(const std::vector<RunRecord>& recs) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const RunRecord& rec : recs) {
    out += rec.quantity + ',' + rec.scale + ',';
    if (rec.p) out += detail::round_trip_double(*rec.p);
    out += ',';
    if (rec.n) out += std::to_string(*rec.n);
    out += ',' + rec.method + ',' + detail::round_trip_double(rec.estimate) + ',';
    if (rec.std_error) out += detail::round_trip_double(*rec.std_error);
    out += ',' + std::to_string(rec.samples_or_nodes) + ',';
    if (rec.seed) out += std::to_string(*rec.seed);
    out += ',';
    if (rec.alpha) out += detail::round_trip_double(*rec.alpha);
    out += ',' + rec.tool_version + '\n';
  }
  return out;
}

inline std::vector<RunRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("records_from_csv: missing or unexpected header");
  }
  std::vector<RunRecord> recs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = detail::split_csv_line(line);
    if (f.size() != 11) {
      throw std::invalid_argument("records_from_csv: expected 11 fields per row");
    }
    RunRecord rec;
    rec.quantity = f[0];
    rec.scale = f[1];
    if (!f[2].empty()) rec.p = std::stod(f[2]);
    if (!f[3].empty()) rec.n = std::stoll(f[3]);
    rec.method = f[4];
    rec.estimate = std::stod(f[5]);
    if (!f[6].empty()) rec.std_error = std::stod(f[6]);
    rec.samples_or_nodes = std::stoull(f[7]);
    if (!f[8].empty()) rec.seed = std::stoull(f[8]);
    if (!f[9].empty()) rec.alpha = std::stod(f[9]);
    rec.tool_version = f[10];
    recs.push_back(rec);
  }
  return recs;
}

// Minimal markdown table: one header row, then data rows, pipe-delimited.
inline std::string markdown_table(const std::vector<std::string>& header,
                                  const std::vector<std::vector<std::string>>& rows) {
  std::string out = "|";
  for (const std::string& h : header) out += " " + h + " |";
  out += "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
  out += "\n";
  for (const std::vector<std::string>& row : rows) {
    out += "|";
    for (const std::string& cell : row) out += " " + cell + " |";
    out += "\n";
  }
  return out;
}

}  // namespace homvol
