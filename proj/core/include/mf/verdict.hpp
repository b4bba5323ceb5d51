#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mf {

enum class Status { Verified, Falsified, Unknown };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

// Three-valued outcome. A Falsified verdict always carries a witness that the
// caller can re-check; an Unknown verdict always records the bound reached.
struct Verdict {
  Status status = Status::Unknown;
  std::vector<std::int64_t> witness;
  std::string detail;
  std::optional<std::uint64_t> bound;

  static Verdict verified(std::string detail = {});
  static Verdict verified_with(std::vector<std::int64_t> witness, std::string detail);
  static Verdict falsified(std::vector<std::int64_t> witness, std::string detail);
  static Verdict unknown(std::uint64_t bound, std::string detail);

  bool is_verified() const { return status == Status::Verified; }
  bool is_falsified() const { return status == Status::Falsified; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace mf
