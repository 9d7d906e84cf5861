#pragma once

#include <stdexcept>
#include <string>

namespace epibound {

/// Parameter outside the model's domain (beta out of (0,1), parity
/// violations, infeasible generator parameters, ...).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A hard resource cap was exceeded (e.g. brute-force edge caps).
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file or unparsable value.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace epibound
