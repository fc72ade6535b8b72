#pragma once

#include <stdexcept>
#include <string>

namespace nesto {

/// Malformed input: empty subsets, indices out of range, bad JSON, unknown names.
class input_error : public std::invalid_argument {
  public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A size or enumeration budget was exceeded (ground > 64, too many facets, ...).
class capacity_error : public std::runtime_error {
  public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation that requires a flag building set / polytope got a non-flag one.
class not_flag_error : public std::runtime_error {
  public:
    explicit not_flag_error(const std::string& what) : std::runtime_error(what) {}
};

/// A polytope expected to be simple is not (non-palindromic h, vertex on too many facets).
class not_simple_error : public std::runtime_error {
  public:
    explicit not_simple_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant violated: a plan step with a bad decomposition, an empty
/// shaved face, a nonzero gamma remainder.  Signals a bug or an inconsistent plan.
class consistency_error : public std::logic_error {
  public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nesto
