#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mf/verdict.hpp"

namespace mf {

struct Check {
  std::string name;
  Status status = Status::Unknown;
  std::vector<std::string> witnesses;
  std::string detail;
  std::uint64_t elapsed_ms = 0;

  friend bool operator==(const Check&, const Check&) = default;
};

// Record of a run. `lines` holds display text (listings, tables) that the
// text format prints verbatim.
struct Report {
  std::string command;
  std::string input;
  std::string tool_version;
  std::vector<Check> checks;
  std::vector<std::string> lines;
  std::uint64_t elapsed_ms = 0;

  // Verified iff every check is; otherwise Falsified if any check is, else Unknown.
  Status status() const;
  std::vector<std::string> witnesses() const;

  Check& add(std::string name, Status status, std::string detail = {},
             std::vector<std::string> witnesses = {});
  Check& add(std::string name, const Verdict& verdict);
  Check& add_bool(std::string name, bool holds, std::string detail = {},
                  std::vector<std::string> witnesses = {});
  void append(const Report& other, const std::string& prefix);

  friend bool operator==(const Report&, const Report&) = default;
};

std::string tool_version();

std::string to_json(const Report& report);
Report report_from_json(const std::string& text);
std::string to_text(const Report& report);

}  // namespace mf
