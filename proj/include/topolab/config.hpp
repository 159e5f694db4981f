#pragma once

#include <stdexcept>
#include <string>

namespace topolab {

// Resource bounds for the enumeration and brute-force machinery. Every bound
// is a hard limit: exceeding it raises ResourceError, never silent truncation.
struct Limits {
  int max_labeled_points = 5;        // enumerate-topologies, labeled mode
  int max_homeo_points = 6;          // enumerate-topologies, up-to-homeomorphism mode
  int max_filter_index = 5;          // enumerate-filters
  int max_space_points = 16;         // explicit FiniteSpace construction
  int max_materialize_points = 16;   // product materialization: point count
  long max_materialize_opens = 1L << 20;  // product materialization: open-family size
  long max_product_points = 4096;    // factored product operations: point count
  long max_bruteforce_sequences = 1L << 22;  // definitional compactness scans
};

// Malformed or out-of-contract inputs (CLI exit 2).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured hard bound was exceeded (CLI exit 3).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A dual-route computation disagreed with itself. Reaching this is a
// soundness bug in the lab, not a property of the inputs.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace topolab
