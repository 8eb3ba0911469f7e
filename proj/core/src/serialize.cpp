#include "rankstab/serialize.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "rankstab/bifiltration_io.hpp"

namespace rankstab {

namespace {

using Json = nlohmann::ordered_json;

Json real(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json vec(std::span<const double> v) { return Json(std::vector<double>(v.begin(), v.end())); }

Json line_json(const LineParam& line) {
  Json j;
  j["m"] = vec(line.direction());
  j["b"] = vec(line.offset());
  j["mStar"] = line.m_star();
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return format_real(x);
}

std::string csv_header(std::size_t n, std::initializer_list<const char*> tail) {
  std::string h;
  for (std::size_t i = 0; i < n; ++i) h += "m" + std::to_string(i + 1) + ",";
  for (std::size_t i = 0; i < n; ++i) h += "b" + std::to_string(i + 1) + ",";
  h += "mStar";
  for (const char* t : tail) h += std::string(",") + t;
  return h + "\n";
}

std::string csv_line_fields(const LineParam& line) {
  std::string s;
  for (double x : line.direction()) s += csv_real(x) + ",";
  for (double x : line.offset()) s += csv_real(x) + ",";
  return s + csv_real(line.m_star());
}

}  // namespace

std::string barcodes_to_json(const std::vector<Barcode>& barcodes) {
  Json arr = Json::array();
  for (const auto& bc : barcodes) {
    for (const auto& i : bc.intervals()) {
      Json j;
      j["degree"] = i.degree;
      j["birth"] = i.birth;
      j["death"] = real(i.death);
      arr.push_back(std::move(j));
    }
  }
  return dump(arr);
}

std::string line_to_json(const LineParam& line) { return dump(line_json(line)); }

std::string bottleneck_result_to_json(const LineParam& line, std::size_t degree, double distance,
                                      double weighted) {
  Json j;
  j["line"] = line_json(line);
  j["degree"] = degree;
  j["distance"] = real(distance);
  j["weighted"] = real(weighted);
  return dump(j);
}

std::string match_result_to_json(const MatchResult& result) {
  Json j;
  j["value"] = real(result.value);
  if (result.argmax) {
    Json a;
    a["m"] = vec(result.argmax->direction());
    a["b"] = vec(result.argmax->offset());
    j["argmax"] = std::move(a);
  } else {
    j["argmax"] = nullptr;
  }
  Json table = Json::array();
  for (const auto& e : result.per_line) {
    Json row = line_json(e.line);
    row["distance"] = real(e.distance);
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return dump(j);
}

std::string stability_report_to_json(const StabilityReport& report) {
  Json j;
  j["construction"] = report.internal ? "internal" : std::string(construction_name(report.construction));
  j[report.internal ? "eta" : "epsilon"] = real(report.bound);
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json row;
    row["line"] = line_json(e.line);
    if (e.other_line) row["otherLine"] = line_json(*e.other_line);
    row["lhs"] = real(e.lhs);
    row["rhs"] = real(e.rhs);
    row["pass"] = e.pass;
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  j["globalPass"] = report.global_pass;
  j["worstMargin"] = real(report.worst_margin);
  return dump(j);
}

std::string match_result_to_csv(const MatchResult& result) {
  const std::size_t n = result.per_line.empty() ? 0 : result.per_line.front().line.dimension();
  std::string out = csv_header(n, {"distance"});
  for (const auto& e : result.per_line) {
    out += csv_line_fields(e.line) + "," + csv_real(e.distance) + "\n";
  }
  return out;
}

std::string stability_report_to_csv(const StabilityReport& report) {
  const std::size_t n = report.entries.empty() ? 0 : report.entries.front().line.dimension();
  std::string out = csv_header(n, {"lhs", "rhs", "pass"});
  for (const auto& e : report.entries) {
    out += csv_line_fields(e.line) + "," + csv_real(e.lhs) + "," + csv_real(e.rhs) + "," +
           (e.pass ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace rankstab
