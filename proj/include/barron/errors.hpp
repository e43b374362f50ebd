#pragma once

#include <stdexcept>

namespace barron {

// Bad configuration or violated precondition; the CLI maps this to exit 2.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure at runtime (divergence, non-finite values); CLI exit 1.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace barron
