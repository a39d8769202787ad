#pragma once

#include <stdexcept>
#include <string>

namespace cf {

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A map was asked to descend to a relative tensor product it does not respect.
struct NotBalanced : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cf
