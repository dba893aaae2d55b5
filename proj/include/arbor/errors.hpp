#pragma once

#include <stdexcept>

namespace arbor {

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A brute-force search or enumeration would exceed its configured bound.
class SearchSpaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonAbelianGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GroupMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity failed; indicates a bug or a falsified identity.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arbor
