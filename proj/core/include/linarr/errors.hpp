#pragma once

#include <stdexcept>
#include <string>

namespace linarr {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TreeDefect {
  SelfLoop,
  DuplicateEdge,
  Cycle,
  WrongEdgeCount,
  Disconnected,
  LabelOutOfRange,
};

std::string to_string(TreeDefect defect);

class NotATreeError : public Error {
 public:
  NotATreeError(TreeDefect defect, const std::string& detail);
  TreeDefect defect() const { return defect_; }

 private:
  TreeDefect defect_;
};

class NotALeafError : public Error {
 public:
  using Error::Error;
};

class DomainTooSmallError : public Error {
 public:
  using Error::Error;
};

class OutOfTableRangeError : public Error {
 public:
  using Error::Error;
};

class SameVertexError : public Error {
 public:
  using Error::Error;
};

class TooFewVerticesError : public Error {
 public:
  using Error::Error;
};

class DegenerateCmaxError : public Error {
 public:
  using Error::Error;
};

class UnreachableDError : public Error {
 public:
  using Error::Error;
};

// Raised by exhaustive searches and enumerations when the instance exceeds
// the configured bound. Callers can fall back to the sampled variants,
// which are estimates rather than exact answers.
class TooLargeError : public Error {
 public:
  TooLargeError(const std::string& what, int n, int bound);
  int n() const { return n_; }
  int bound() const { return bound_; }

 private:
  int n_;
  int bound_;
};

}  // namespace linarr
