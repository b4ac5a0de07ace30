#ifndef SERREQ_ERROR_HPP
#define SERREQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace serreq {

// Malformed usage: foreign-category values, endpoint mismatches,
// dimension mismatches, bad parses.
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematically meaningful precondition failed (e.g. "not liftable
// modulo C"); the input was well-formed.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant was breached; always a bug.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace serreq

#endif
