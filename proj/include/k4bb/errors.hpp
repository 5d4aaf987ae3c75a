#pragma once

#include <stdexcept>
#include <string>

namespace k4bb {

/// A stated precondition of an operation does not hold for the given input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds a hard size cap of an exhaustive routine.
class SizeLimitError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Malformed graph file or expression manifest.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An internal guarantee failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// No vertex class was sparse enough to absorb the given vertex.
class AssignmentFailure : public PreconditionError {
 public:
  AssignmentFailure(int vertex, long long e0, long long e1, long long e2)
      : PreconditionError("vertex " + std::to_string(vertex) +
                          " has no sparse class, edge counts " + std::to_string(e0) + "/" +
                          std::to_string(e1) + "/" + std::to_string(e2)),
        vertex_(vertex),
        counts_{e0, e1, e2} {}
  int vertex() const { return vertex_; }
  const long long* counts() const { return counts_; }

 private:
  int vertex_;
  long long counts_[3];
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace k4bb
