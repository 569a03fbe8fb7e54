#pragma once

#include <stdexcept>
#include <string>

namespace qnc {

// Violated precondition on user-supplied data. CLI maps this to exit code 1.
struct input_error : std::invalid_argument {
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Violated internal contract (a formula audit mismatch, a failed certificate).
// Never caused by user input; CLI maps this to exit code 2.
struct contract_error : std::logic_error {
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw input_error(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw contract_error(what);
}

}  // namespace qnc
