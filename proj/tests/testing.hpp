#pragma once

#include <optional>

#include "gkws/error.hpp"

namespace gkws::testing {

/// The error code thrown by `fn`, or nothing if it returns normally.
template <class Fn>
std::optional<Errc> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace gkws::testing
