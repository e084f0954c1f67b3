#pragma once

#include <stdexcept>
#include <string>

namespace xfkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension mismatches, unknown rows, unparsable documents.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Violated mathematical preconditions (odd |T|, non-blocking input, empty pieces, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A point that was required to lie in a polyhedron does not.
class MembershipError : public DomainError {
 public:
  MembershipError(const std::string& what, std::string violated_row)
      : DomainError(what), violated_row_(std::move(violated_row)) {}
  const std::string& violated_row() const { return violated_row_; }

 private:
  std::string violated_row_;
};

/// Double description refused because the ambient dimension exceeds the cap.
class DimensionCapExceeded : public Error {
 public:
  DimensionCapExceeded(std::size_t dimension, std::size_t cap)
      : Error("double description refused: dimension " + std::to_string(dimension) + " exceeds cap " +
              std::to_string(cap)),
        dimension_(dimension),
        cap_(cap) {}
  std::size_t dimension() const { return dimension_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t dimension_;
  std::size_t cap_;
};

}  // namespace xfkit
