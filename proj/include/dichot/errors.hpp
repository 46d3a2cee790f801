#pragma once

#include <stdexcept>
#include <string>

namespace dichot {

/// Input exceeds a configured size limit or feasibility tier.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed; always indicates a bug upstream.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

}  // namespace dichot
