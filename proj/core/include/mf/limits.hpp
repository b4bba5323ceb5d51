#pragma once

#include <cstddef>
#include <string>

namespace mf {

inline constexpr std::size_t kDefaultRingCap = 100000;
inline constexpr std::size_t kDefaultModuleCap = 4096;
inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 22;

// Returns `default_cap`, or the value of MF_SIZE_CAP when that variable is set
// to a positive integer. Read on every call; there is no global state.
std::size_t size_cap(std::size_t default_cap);

// Throws SizeExceeded when `size > cap`.
void require_within(std::size_t size, std::size_t cap, const std::string& what);

}  // namespace mf
