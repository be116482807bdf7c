#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "seminorm_lab/rational.hpp"

namespace seminorm_lab {

inline std::string approx_string(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", approx(r));
  return buf;
}

/// Number of displayed glyphs, not bytes: counts UTF-8 code points so that
/// padding stays aligned around multibyte characters in cells.
inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

struct ReportRow {
  std::string label;
  std::vector<Rational> values;
  bool pass = true;
};

/**
 * A table of exact values with one verdict per row: the shared shape of all
 * certificates this library produces. Rendering is deterministic so runs can
 * be compared byte for byte.
 */
class CertificateReport {
 public:
  CertificateReport(std::string kind, std::string title, std::vector<std::string> value_columns,
                    std::string label_column = "n")
      : kind_(std::move(kind)),
        title_(std::move(title)),
        columns_(std::move(value_columns)),
        label_column_(std::move(label_column)) {}

  void add_metadata(std::string key, std::string value) {
    metadata_.emplace_back(std::move(key), std::move(value));
  }

  void add_row(std::string label, std::vector<Rational> values, bool pass) {
    if (values.size() != columns_.size())
      throw std::invalid_argument("report: row width does not match columns");
    if (!pass && !first_failure_) first_failure_ = label;
    rows_.push_back({std::move(label), std::move(values), pass});
  }

  const std::string& kind() const { return kind_; }
  const std::string& title() const { return title_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<ReportRow>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const { return metadata_; }
  const std::optional<std::string>& first_failure() const { return first_failure_; }

  bool overall_pass() const {
    for (const ReportRow& r : rows_)
      if (!r.pass) return false;
    return true;
  }

  void render_table(std::ostream& os) const {
    os << title_ << "\n";
    for (const auto& [k, v] : metadata_) os << "  " << k << ": " << v << "\n";
    std::vector<std::string> headers = {label_column_};
    headers.insert(headers.end(), columns_.begin(), columns_.end());
    headers.push_back("verdict");
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows_.size());
    for (const ReportRow& r : rows_) {
      std::vector<std::string> row = {r.label};
      for (const Rational& v : r.values)
        row.push_back(format_rational(v) + " (≈" + approx_string(v) + ")");
      row.push_back(r.pass ? "ok" : "FAIL");
      cells.push_back(std::move(row));
    }
    std::vector<std::size_t> width(headers.size());
    for (std::size_t j = 0; j < headers.size(); ++j) {
      width[j] = display_width(headers[j]);
      for (const auto& row : cells) width[j] = std::max(width[j], display_width(row[j]));
    }
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        os << "  " << row[j];
        if (j + 1 < row.size()) os << std::string(width[j] - display_width(row[j]), ' ');
      }
      os << "\n";
    };
    line(headers);
    for (const auto& row : cells) line(row);
    os << "  result: " << (overall_pass() ? "pass" : "fail");
    if (first_failure_) os << " (first failure at " << label_column_ << "=" << *first_failure_ << ")";
    os << "\n";
  }

  void render_csv(std::ostream& os) const {
    os << label_column_;
    for (const std::string& c : columns_) os << "," << c;
    for (const std::string& c : columns_) os << "," << c << "_approx";
    os << ",verdict\n";
    for (const ReportRow& r : rows_) {
      os << r.label;
      for (const Rational& v : r.values) os << "," << format_rational(v);
      for (const Rational& v : r.values) os << "," << approx_string(v);
      os << "," << (r.pass ? "ok" : "FAIL") << "\n";
    }
  }

  nlohmann::json to_json() const {
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [k, v] : metadata_) meta[k] = v;
    nlohmann::json rows = nlohmann::json::array();
    for (const ReportRow& r : rows_) {
      nlohmann::json values = nlohmann::json::array();
      nlohmann::json approx_values = nlohmann::json::array();
      for (const Rational& v : r.values) {
        values.push_back(format_rational(v));
        approx_values.push_back(approx(v));
      }
      rows.push_back({{"label", r.label},
                      {"values", values},
                      {"approx", approx_values},
                      {"pass", r.pass}});
    }
    nlohmann::json j = {{"schema", "seminorm-lab/1"},
                        {"kind", kind_},
                        {"title", title_},
                        {"metadata", meta},
                        {"label_column", label_column_},
                        {"columns", columns_},
                        {"rows", rows},
                        {"pass", overall_pass()}};
    j["first_failure"] = first_failure_ ? nlohmann::json(*first_failure_) : nlohmann::json();
    return j;
  }

 private:
  std::string kind_;
  std::string title_;
  std::vector<std::string> columns_;
  std::string label_column_;
  std::vector<std::pair<std::string, std::string>> metadata_;
  std::vector<ReportRow> rows_;
  std::optional<std::string> first_failure_;
};

}  // namespace seminorm_lab
