#pragma once

// Verification reports: one record per check, JSON rendering and parsing.
// Runtimes live in a side channel that is only rendered on request, so the
// default JSON is byte-identical across runs with equal configuration.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "tpd/core/errors.hpp"

namespace tpd {

enum class CheckStatus { pass, fail, flagged };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::flagged: return "flagged";
  }
  return "?";
}

inline CheckStatus parse_check_status(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "flagged") return CheckStatus::flagged;
  throw InvalidInput("unknown check status: " + s);
}

// How the residual is compared with the tolerance.
enum class Bound { upper, lower, exact };  // residual < tol, residual >= tol, residual == 0

inline std::string to_string(Bound b) {
  switch (b) {
    case Bound::upper: return "upper";
    case Bound::lower: return "lower";
    case Bound::exact: return "exact";
  }
  return "?";
}

inline Bound parse_bound(const std::string& s) {
  if (s == "upper") return Bound::upper;
  if (s == "lower") return Bound::lower;
  if (s == "exact") return Bound::exact;
  throw InvalidInput("unknown bound: " + s);
}

struct CheckRecord {
  std::string id;      // module.operation.property
  std::string anchor;  // the statement being checked
  CheckStatus status = CheckStatus::pass;
  double residual = 0.0;
  double tolerance = 0.0;
  Bound bound = Bound::upper;
  std::string note;
  double runtime_ms = 0.0;  // side channel

  bool within() const {
    switch (bound) {
      case Bound::upper: return std::isfinite(residual) && residual < tolerance;
      case Bound::lower: return std::isfinite(residual) && residual >= tolerance;
      case Bound::exact: return residual == 0.0;
    }
    return false;
  }

  bool operator==(const CheckRecord&) const = default;
};

/// A measured check: pass or fail by the bound.
inline CheckRecord measured(std::string id, std::string anchor, double residual, double tolerance,
                            Bound bound = Bound::upper, std::string note = "") {
  CheckRecord r{std::move(id), std::move(anchor), CheckStatus::pass, residual, tolerance, bound, std::move(note), 0.0};
  r.status = r.within() ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

/// A recorded discrepancy in the source text. The residual is what was
/// measured against the quoted statement.
inline CheckRecord flagged(std::string id, std::string anchor, double residual, double tolerance, std::string note,
                           Bound bound = Bound::upper) {
  return {std::move(id), std::move(anchor), CheckStatus::flagged, residual, tolerance, bound, std::move(note), 0.0};
}

/// A quoted statement checked against computation: flagged when the residual
/// confirms the discrepancy, pass when the quoted statement holds after all.
inline CheckRecord discrepancy(std::string id, std::string anchor, double residual, double tolerance, std::string note) {
  if (std::isfinite(residual) && residual < tolerance)
    return measured(std::move(id), std::move(anchor), residual, tolerance, Bound::upper, "quoted statement holds");
  return flagged(std::move(id), std::move(anchor), residual, tolerance, std::move(note));
}

struct VerificationReport {
  std::string suite;  // "all" or one suite name
  std::map<std::string, std::string> config;
  std::map<std::string, std::string> metadata;
  std::vector<CheckRecord> checks;

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }
  bool ok() const { return count(CheckStatus::fail) == 0; }
  int exit_status() const { return ok() ? 0 : 1; }

  bool operator==(const VerificationReport&) const = default;
};

namespace detail {

// Non-finite residuals render as strings so the document stays valid JSON.
inline nlohmann::ordered_json number_or_string(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

inline double number_from(const nlohmann::ordered_json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  throw InvalidInput("bad number in report: " + s);
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timings = false) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["summary"] = {{"checks", r.checks.size()},
                  {"pass", r.count(CheckStatus::pass)},
                  {"flagged", r.count(CheckStatus::flagged)},
                  {"fail", r.count(CheckStatus::fail)}};
  j["config"] = r.config;
  j["metadata"] = r.metadata;
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    arr.push_back({{"id", c.id},
                   {"anchor", c.anchor},
                   {"status", to_string(c.status)},
                   {"residual", detail::number_or_string(c.residual)},
                   {"tolerance", c.tolerance},
                   {"bound", to_string(c.bound)},
                   {"note", c.note}});
  if (with_timings) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& c : r.checks) t[c.id] = c.runtime_ms;
    j["side_channel"] = {{"runtime_ms", t}};
  }
  return j;
}

inline std::string render_json(const VerificationReport& r, bool with_timings = false) {
  return to_json(r, with_timings).dump(2) + "\n";
}

inline VerificationReport parse_report(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.config = j.at("config").get<std::map<std::string, std::string>>();
  r.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
  std::map<std::string, double> timing;
  if (j.contains("side_channel")) timing = j["side_channel"].at("runtime_ms").get<std::map<std::string, double>>();
  for (const auto& c : j.at("checks")) {
    CheckRecord rec;
    rec.id = c.at("id").get<std::string>();
    rec.anchor = c.at("anchor").get<std::string>();
    rec.status = parse_check_status(c.at("status").get<std::string>());
    rec.residual = detail::number_from(c.at("residual"));
    rec.tolerance = c.at("tolerance").get<double>();
    rec.bound = parse_bound(c.at("bound").get<std::string>());
    rec.note = c.at("note").get<std::string>();
    if (auto it = timing.find(rec.id); it != timing.end()) rec.runtime_ms = it->second;
    r.checks.push_back(std::move(rec));
  }
  return r;
}

/// One line per check: status, id, residual vs tolerance.
inline std::string render_text(const VerificationReport& r) {
  std::string out;
  char buf[64];
  for (const auto& c : r.checks) {
    std::snprintf(buf, sizeof buf, "%-8s", to_string(c.status).c_str());
    out += buf + c.id;
    std::snprintf(buf, sizeof buf, "  residual=%.3g %s %.3g", c.residual,
                  c.status == CheckStatus::flagged ? "vs"
                  : c.bound == Bound::lower       ? ">="
                  : c.bound == Bound::exact       ? "=="
                                                  : "<",
                  c.tolerance);
    out += buf;
    if (!c.note.empty()) out += "  (" + c.note + ")";
    out += "\n";
  }
  std::snprintf(buf, sizeof buf, "%zu checks: %zu pass, %zu flagged, %zu fail\n", r.checks.size(),
                r.count(CheckStatus::pass), r.count(CheckStatus::flagged), r.count(CheckStatus::fail));
  return out + buf;
}

}  // namespace tpd
