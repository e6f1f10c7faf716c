#pragma once

#include <gtest/gtest.h>

#include "pepscan/error.hpp"

namespace pepscan::testkit {

// Runs `f` and returns the code of the pepscan::Error it throws.
template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected pepscan::Error";
  return ErrorCode::kIo;
}

}  // namespace pepscan::testkit
