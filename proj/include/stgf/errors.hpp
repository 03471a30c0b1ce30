#pragma once

#include <stdexcept>
#include <string>

namespace stgf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument is out of its documented range.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("invalid argument: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class NotATree : public Error {
 public:
  explicit NotATree(const std::string& what) : Error("not a tree: " + what) {}
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& label)
      : Error("unknown vertex '" + label + "'") {}
};

class SameVertex : public Error {
 public:
  explicit SameVertex(const std::string& label)
      : Error("anchor vertices must be distinct, got '" + label + "' twice") {}
};

class NotPendant : public Error {
 public:
  explicit NotPendant(const std::string& label)
      : Error("vertex '" + label + "' is not a pendant vertex") {}
};

class LengthMismatch : public Error {
 public:
  explicit LengthMismatch(const std::string& what) : Error("length mismatch: " + what) {}
};

class KTooSmall : public Error {
 public:
  KTooSmall(int k, int minimum)
      : Error("degree bound k=" + std::to_string(k) + " is below the minimum " +
              std::to_string(minimum)) {}
};

class TooLarge : public Error {
 public:
  TooLarge(std::size_t n, std::size_t bound)
      : Error("tree has " + std::to_string(n) + " vertices, oracle bound is " +
              std::to_string(bound)) {}
};

class NegativeCoefficient : public Error {
 public:
  explicit NegativeCoefficient(const std::string& what)
      : Error("negative coefficient: " + what) {}
};

}  // namespace stgf
