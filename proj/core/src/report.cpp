#include "mf/report.hpp"

#include "json.hpp"

#include "mf/error.hpp"

namespace mf {

namespace {

std::string witness_text(const std::vector<std::int64_t>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace

std::string tool_version() { return "0.1.0"; }

Status Report::status() const {
  bool any_falsified = false;
  bool all_verified = true;
  for (const Check& c : checks) {
    any_falsified = any_falsified || c.status == Status::Falsified;
    all_verified = all_verified && c.status == Status::Verified;
  }
  if (all_verified) return Status::Verified;
  return any_falsified ? Status::Falsified : Status::Unknown;
}

std::vector<std::string> Report::witnesses() const {
  std::vector<std::string> out;
  for (const Check& c : checks) {
    if (c.status == Status::Verified) continue;
    for (const std::string& w : c.witnesses) out.push_back(c.name + ": " + w);
  }
  return out;
}

Check& Report::add(std::string name, Status status, std::string detail,
                   std::vector<std::string> witnesses) {
  checks.push_back(Check{std::move(name), status, std::move(witnesses), std::move(detail), 0});
  return checks.back();
}

Check& Report::add(std::string name, const Verdict& verdict) {
  std::vector<std::string> witnesses;
  if (!verdict.witness.empty()) witnesses.push_back(witness_text(verdict.witness));
  if (verdict.bound) witnesses.push_back("bound=" + std::to_string(*verdict.bound));
  return add(std::move(name), verdict.status, verdict.detail, std::move(witnesses));
}

Check& Report::add_bool(std::string name, bool holds, std::string detail,
                        std::vector<std::string> witnesses) {
  return add(std::move(name), holds ? Status::Verified : Status::Falsified, std::move(detail),
             std::move(witnesses));
}

void Report::append(const Report& other, const std::string& prefix) {
  for (Check c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["input"] = report.input;
  j["tool_version"] = report.tool_version;
  j["status"] = to_string(report.status());
  j["witnesses"] = report.witnesses();
  j["elapsed_ms"] = report.elapsed_ms;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["witnesses"] = c.witnesses;
    cj["detail"] = c.detail;
    cj["elapsed_ms"] = c.elapsed_ms;
    j["checks"].push_back(std::move(cj));
  }
  j["lines"] = report.lines;
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.tool_version = j.at("tool_version").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
    for (const auto& cj : j.at("checks")) {
      Check c;
      c.name = cj.at("name").get<std::string>();
      c.status = status_from_string(cj.at("status").get<std::string>());
      c.witnesses = cj.at("witnesses").get<std::vector<std::string>>();
      c.detail = cj.at("detail").get<std::string>();
      c.elapsed_ms = cj.at("elapsed_ms").get<std::uint64_t>();
      r.checks.push_back(std::move(c));
    }
    r.lines = j.value("lines", std::vector<std::string>{});
    if (to_string(r.status()) != j.at("status").get<std::string>()) {
      throw ParseError("report status does not match its checks");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const Report& report) {
  std::string out = "command: " + report.command + "\n";
  if (!report.input.empty()) out += "input: " + report.input + "\n";
  for (const std::string& line : report.lines) out += line + "\n";
  for (const Check& c : report.checks) {
    out += "[" + to_string(c.status) + "] " + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    if (c.elapsed_ms > 0) out += " (" + std::to_string(c.elapsed_ms) + " ms)";
    out += "\n";
    for (const std::string& w : c.witnesses) out += "    witness " + w + "\n";
  }
  out += "status: " + to_string(report.status()) + "\n";
  if (report.elapsed_ms > 0) out += "elapsed_ms: " + std::to_string(report.elapsed_ms) + "\n";
  return out;
}

}  // namespace mf
