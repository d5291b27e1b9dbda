#pragma once

#include <stdexcept>
#include <string>

namespace qpse {

// Base of every qpse exception.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- validation errors (CLI exit code 2) ---

struct ZeroNorm : Error {
  explicit ZeroNorm(const std::string& msg) : Error(msg) {}
};

struct NotNormalized : Error {
  explicit NotNormalized(const std::string& msg) : Error(msg) {}
};

struct NonFinite : Error {
  explicit NonFinite(const std::string& msg) : Error(msg) {}
};

struct GridMismatch : Error {
  explicit GridMismatch(const std::string& msg) : Error(msg) {}
};

struct UnsupportedSpin : Error {
  explicit UnsupportedSpin(const std::string& msg) : Error(msg) {}
};

// --- numerical guards (CLI exit code 3) ---
// A guard means the requested computation would silently produce garbage on
// this grid (clipped tails, aliased momenta, periodic wraparound).

struct NumericalGuard : Error {
  explicit NumericalGuard(const std::string& msg) : Error(msg) {}
};

struct GridTooSmall : NumericalGuard {
  explicit GridTooSmall(const std::string& msg) : NumericalGuard(msg) {}
};

struct AliasedMomentum : NumericalGuard {
  explicit AliasedMomentum(const std::string& msg) : NumericalGuard(msg) {}
};

struct EdgeMassExceeded : NumericalGuard {
  explicit EdgeMassExceeded(const std::string& msg) : NumericalGuard(msg) {}
};

}  // namespace qpse
