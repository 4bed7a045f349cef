#pragma once

#include <stdexcept>
#include <string>

namespace digitop {

// Points of different ambient dimension, or an adjacency that does not fit the
// dimension it is used with.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A point was looked up in an image that does not contain it.
class MembershipError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Invalid generator bounds, coordinate overflow, or an enumeration limit.
class BoundsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called on input that violates its precondition, e.g. a map
// that is not total, or a non-isomorphism where one is required.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace digitop
