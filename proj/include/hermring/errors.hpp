#pragma once

#include <stdexcept>
#include <string>

namespace hermring {

// Truncation too small for the requested certificate; message states the
// required bound.
struct NeedsMoreTerms : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A coefficient has p in its denominator; message names the offending index.
struct NotPIntegral : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ledger construction violated an integrality the paper proves; message
// names the form and the first bad index. Signals a transcription or
// Eisenstein bug, not mathematics.
struct LedgerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeightMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A division the theory proves exact came out inexact.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

}  // namespace hermring
