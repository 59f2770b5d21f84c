#pragma once

#include <stdexcept>
#include <string>

namespace predkit {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: length mismatches, bad bit characters, dangling indices.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A well-formed instance that violates a problem precondition
// (degree bound, overlap bound, isolated vertex under a strict reduction).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// An exhaustive oracle was asked to search beyond its size cap.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// A paging policy asked to evict a page that is not cached, or overfilled the cache.
class PolicyBug : public Error {
 public:
  using Error::Error;
};

// A reduction produced an instance that breaks its own construction rules.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Two replays of the same algorithm on the same history disagreed.
class DeterminismError : public Error {
 public:
  using Error::Error;
};

}  // namespace predkit
