#pragma once

#include <stdexcept>
#include <string>

namespace cdq {

// Requested problem size exceeds a hard capacity cap (dense state, oracle, PMF).
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cdq
