#ifndef WALKGAUGE_ERRORS_HPP
#define WALKGAUGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace walkgauge {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Graph construction rejects.
class GraphError : public Error {
public:
  using Error::Error;
};

class SelfLoopError : public GraphError {
public:
  using GraphError::GraphError;
};

class DuplicateEdgeError : public GraphError {
public:
  using GraphError::GraphError;
};

class VertexOutOfRangeError : public GraphError {
public:
  using GraphError::GraphError;
};

class DisconnectedError : public GraphError {
public:
  using GraphError::GraphError;
};

// Structure predicates (cycle extraction on a non-unicyclic graph, ...).
class NotUnicyclicError : public GraphError {
public:
  using GraphError::GraphError;
};

// Exhaustive enumeration / certificate size ceilings.
class SizeLimitError : public Error {
public:
  using Error::Error;
};

// Exact arithmetic / linear algebra.
class ArithmeticError : public Error {
public:
  using Error::Error;
};

class DivisionByZeroError : public ArithmeticError {
public:
  using ArithmeticError::ArithmeticError;
};

class SingularMatrixError : public ArithmeticError {
public:
  using ArithmeticError::ArithmeticError;
};

class DimensionMismatchError : public ArithmeticError {
public:
  using ArithmeticError::ArithmeticError;
};

// Input deserialization; carries a 1-based line number when known (0 = n/a).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// A redundant computation path disagreed with the primary one.
class VerificationError : public Error {
public:
  using Error::Error;
};

}  // namespace walkgauge

#endif
