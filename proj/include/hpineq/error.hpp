#pragma once

#include <stdexcept>
#include <string>

namespace hpineq {

// Malformed input: dimension mismatch, non-finite entries, bad parameters,
// unparsable files.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A size guard (tensor dimension, group order, subset count) was exceeded.
class BudgetError : public std::length_error {
 public:
  explicit BudgetError(const std::string& what) : std::length_error(what) {}
};

}  // namespace hpineq
