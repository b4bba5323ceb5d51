#include "mf/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "mf/error.hpp"

namespace mf {

std::size_t size_cap(std::size_t default_cap) {
  const char* raw = std::getenv("MF_SIZE_CAP");
  if (raw == nullptr) return default_cap;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    return default_cap;
  }
  return value;
}

void require_within(std::size_t size, std::size_t cap, const std::string& what) {
  if (size > cap) {
    throw SizeExceeded(what + " has " + std::to_string(size) +
                       " elements, cap is " + std::to_string(cap));
  }
}

}  // namespace mf
