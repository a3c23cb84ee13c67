#pragma once

#include <gtest/gtest.h>

#include "symkit/error.hpp"

// Runs fn and returns the code of the symkit::Error it throws.
template <class Fn>
symkit::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const symkit::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no symkit::Error thrown";
  return symkit::ErrorCode::ParseError;
}
