#pragma once

#include <stdexcept>
#include <string>

namespace lyap {

/** Invalid user-supplied data: bad flags, malformed files, zero right-hand sides. */
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/** Requesting more stored length-N vectors than the configured budget allows. */
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/** A numerical routine could not deliver its contract (eigensolver failure,
 *  singular projected equation, indefinite mass matrix). */
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/** An API was called in a state it does not support. */
class UsageError : public std::logic_error {
 public:
  explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lyap
