#include "linarr/errors.hpp"

namespace linarr {

std::string to_string(TreeDefect defect) {
  switch (defect) {
    case TreeDefect::SelfLoop:
      return "self-loop";
    case TreeDefect::DuplicateEdge:
      return "duplicate";
    case TreeDefect::Cycle:
      return "cycle";
    case TreeDefect::WrongEdgeCount:
      return "wrong edge count";
    case TreeDefect::Disconnected:
      return "disconnected";
    case TreeDefect::LabelOutOfRange:
      return "label out of range";
  }
  return "unknown";
}

NotATreeError::NotATreeError(TreeDefect defect, const std::string& detail)
    : Error("not a tree (" + to_string(defect) + "): " + detail),
      defect_(defect) {}

TooLargeError::TooLargeError(const std::string& what, int n, int bound)
    : Error(what), n_(n), bound_(bound) {}

}  // namespace linarr
