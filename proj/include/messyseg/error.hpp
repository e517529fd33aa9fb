#pragma once

#include <stdexcept>
#include <string>

namespace messyseg {

// Error taxonomy shared by the library and the CLI. The CLI maps
// UsageError/DataError to exit code 2 and NumericError to exit code 3.

// Caller violated a contract (bad arguments, mismatched shapes, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input files or corpora are malformed or inconsistent.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure: non-finite values, diverging training, ...
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace messyseg
