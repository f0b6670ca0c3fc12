#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hermix {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad files, out-of-range indices, broken preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicatePair : public InputError {
 public:
  DuplicatePair(std::size_t u, std::size_t v)
      : InputError("duplicate declaration of pair {" + std::to_string(u) + ", " +
                   std::to_string(v) + "}"),
        u_(u),
        v_(v) {}
  std::size_t first() const noexcept { return u_; }
  std::size_t second() const noexcept { return v_; }

 private:
  std::size_t u_, v_;
};

class SelfLoop : public InputError {
 public:
  explicit SelfLoop(std::size_t v)
      : InputError("self-loop at vertex " + std::to_string(v)), v_(v) {}
  std::size_t vertex() const noexcept { return v_; }

 private:
  std::size_t v_;
};

class IndexOutOfRange : public InputError {
 public:
  IndexOutOfRange(std::size_t v, std::size_t n)
      : InputError("vertex " + std::to_string(v) + " out of range [0, " +
                   std::to_string(n) + ")"),
        v_(v) {}
  std::size_t vertex() const noexcept { return v_; }

 private:
  std::size_t v_;
};

class InvalidRootParameter : public InputError {
 public:
  explicit InvalidRootParameter(long k)
      : InputError("k must be at least 3 (omega = exp(2*pi*i/k), k >= 3), got " +
                   std::to_string(k)) {}
};

class CycleBudgetExceeded : public Error {
 public:
  explicit CycleBudgetExceeded(std::size_t limit)
      : Error("simple-cycle enumeration exceeded cap of " + std::to_string(limit)),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class NotACycle : public InputError {
 public:
  using InputError::InputError;
};

class UnderlyingMismatch : public InputError {
 public:
  UnderlyingMismatch() : InputError("graphs do not share the same underlying graph") {}
};

class NotHermitian : public InputError {
 public:
  using InputError::InputError;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class OracleCapExceeded : public InputError {
 public:
  OracleCapExceeded(std::size_t n, std::size_t cap)
      : InputError("characteristic-polynomial oracle limited to n <= " + std::to_string(cap) +
                   ", got n = " + std::to_string(n)) {}
};

class NonRealCoefficient : public Error {
 public:
  using Error::Error;
};

class PartitionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NotAdmissible : public InputError {
 public:
  using InputError::InputError;
};

class ForbiddenArc : public InputError {
 public:
  ForbiddenArc(std::size_t from, std::size_t to)
      : InputError("arc " + std::to_string(from) + "->" + std::to_string(to) +
                   " runs from the second part to the first"),
        from_(from),
        to_(to) {}
  std::size_t from() const noexcept { return from_; }
  std::size_t to() const noexcept { return to_; }

 private:
  std::size_t from_, to_;
};

class DisconnectedGraph : public InputError {
 public:
  DisconnectedGraph() : InputError("graph must be connected") {}
};

class CapExceeded : public InputError {
 public:
  CapExceeded(std::size_t m, std::size_t cap)
      : InputError("underlying graph has " + std::to_string(m) + " edges, cap is " +
                   std::to_string(cap)),
        m_(m),
        cap_(cap) {}
  std::size_t m() const noexcept { return m_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t m_, cap_;
};

/// A numeric result contradicted a combinatorial one. Indicates a solver or
/// logic fault; never expected on valid input.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hermix
