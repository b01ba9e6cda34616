#pragma once

#include <stdexcept>
#include <string>

namespace sharbly {

/// Malformed input data (bad JSON structure, non-integer entries, ...).
class schema_error : public std::runtime_error {
 public:
  explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid data combined inconsistently: mixed bigrades,
/// mismatched characters, term shapes disagreeing with the declared grade.
class grade_error : public std::runtime_error {
 public:
  explicit grade_error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the supported domain, or a resource cap was hit
/// (canonicalization width, truncation size).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sharbly
