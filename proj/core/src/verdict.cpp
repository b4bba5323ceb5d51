#include "mf/verdict.hpp"

#include "mf/error.hpp"

namespace mf {

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "Verified";
    case Status::Falsified: return "Falsified";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

Status status_from_string(const std::string& s) {
  if (s == "Verified") return Status::Verified;
  if (s == "Falsified") return Status::Falsified;
  if (s == "Unknown") return Status::Unknown;
  throw ParseError("unknown status '" + s + "'");
}

Verdict Verdict::verified(std::string detail) {
  return Verdict{Status::Verified, {}, std::move(detail), std::nullopt};
}

Verdict Verdict::verified_with(std::vector<std::int64_t> witness, std::string detail) {
  return Verdict{Status::Verified, std::move(witness), std::move(detail), std::nullopt};
}

Verdict Verdict::falsified(std::vector<std::int64_t> witness, std::string detail) {
  if (witness.empty()) {
    throw PreconditionFailed("a Falsified verdict needs a witness");
  }
  return Verdict{Status::Falsified, std::move(witness), std::move(detail), std::nullopt};
}

Verdict Verdict::unknown(std::uint64_t bound, std::string detail) {
  return Verdict{Status::Unknown, {}, std::move(detail), bound};
}

}  // namespace mf
