#pragma once

#include <stdexcept>
#include <string>

namespace sr {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid user input: rates, emitter counts, initial conditions, flags.
struct ValidationError : Error {
  using Error::Error;
};

// The requested operation does not apply to this graph (e.g. a cascade
// solve on a pumped graph).
struct UnsupportedGraphError : Error {
  using Error::Error;
};

// A printed closed form is degenerate for these inputs (e.g. the two-emitter
// analytic solution at gamma = 0, which has gamma in a denominator).
struct DegenerateFormulaError : Error {
  using Error::Error;
};

// Adaptive integration could not reach the requested tolerance.
struct IntegrationError : Error {
  using Error::Error;
};

// A linear solve or other numerical kernel failed.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace sr
