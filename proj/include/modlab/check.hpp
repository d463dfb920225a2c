#pragma once

#include <stdexcept>
#include <string>

namespace modlab {

/// Raised when a structural self-check fails; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace modlab

// Always-on invariant check; these guard exactness, never hot paths.
#define MODLAB_CHECK(cond, msg)                                                        \
  do {                                                                                 \
    if (!(cond)) throw ::modlab::internal_error(std::string("check failed: ") + (msg)); \
  } while (0)
