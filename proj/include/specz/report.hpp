#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "specz/checks.hpp"

namespace specz {

enum class ReportFormat { Json, Text };

inline ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "text") return ReportFormat::Text;
  fail(ErrorCode::InvalidArgument, "unknown report format '" + s + "'");
}

namespace detail {

inline nlohmann::ordered_json point_json(const Point& p) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& x : p) a.push_back(x.str());
  return a;
}

inline nlohmann::ordered_json report_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["subjects"] = r.subjects;
  j["status"] = std::string(to_string(r.status));
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["bound"] = r.bound;
  auto alphas = nlohmann::ordered_json::array();
  for (const auto& p : r.alphas) alphas.push_back(point_json(p));
  j["alpha_list"] = alphas;
  j["certificate"] = r.certificate;
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    nlohmann::ordered_json cx;
    cx["seed"] = c.seed;
    cx["trial"] = c.trial;
    cx["alpha"] = point_json(c.alpha);
    cx["inputs"] = c.inputs;
    cx["detail"] = c.detail;
    cx["on_certificate"] = c.on_certificate;
    j["counterexample"] = cx;
  } else {
    j["counterexample"] = nullptr;
  }
  j["reason"] = r.reason;
  return j;
}

inline std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace detail

inline std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format) {
  if (format == ReportFormat::Json) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& r : reports) a.push_back(detail::report_json(r));
    return a.dump(2);
  }
  std::vector<std::vector<std::string>> rows = {
      {"theorem", "subjects", "status", "trials", "seed", "certificate", "elapsed_ms"}};
  for (const auto& r : reports) {
    std::string subj;
    for (std::size_t k = 0; k < r.subjects.size(); ++k) subj += (k ? "," : "") + r.subjects[k];
    rows.push_back({r.theorem, subj, std::string(to_string(r.status)), std::to_string(r.trials),
                    std::to_string(r.seed), r.certificate, std::to_string(r.elapsed_ms)});
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  std::ostringstream out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string line;
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      line += k + 1 < rows[i].size() ? detail::pad(rows[i][k], width[k] + 2) : rows[i][k];
    out << line << "\n";
    if (i == 0) continue;
    const CheckReport& r = reports[i - 1];
    if (!r.reason.empty()) out << "  reason: " << r.reason << "\n";
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      out << "  counterexample: trial " << c.trial << ", seed " << c.seed << ", alpha " << point_str(c.alpha)
          << (c.on_certificate ? " (on the certificate zero set)" : "") << "\n";
      out << "  detail: " << c.detail << "\n";
      for (const auto& line : c.inputs) out << "    " << line << "\n";
    }
  }
  return out.str();
}

}  // namespace specz
