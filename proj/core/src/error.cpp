#include "mf/error.hpp"

namespace mf {

Error::Error(std::string kind, const std::string& message)
    : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

}  // namespace mf
