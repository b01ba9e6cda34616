#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace sharbly::config {

inline std::size_t default_max_cols() {
  if (const char* env = std::getenv("SHARBLY_MAX_COLS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return 9;
}

inline std::size_t& max_cols_ref() {
  static std::size_t cap = default_max_cols();
  return cap;
}

/// Current canonicalization width cap (number of columns). Comes from
/// SHARBLY_MAX_COLS, default 9; guards against accidental combinatorial
/// blowup on wide inputs.
inline std::size_t max_cols() { return max_cols_ref(); }
inline void set_max_cols(std::size_t cap) { max_cols_ref() = cap; }

/// Scoped raise of the width cap (never lowers it).
class MaxColsGuard {
 public:
  explicit MaxColsGuard(std::size_t cap) : saved_(max_cols()) {
    if (cap > saved_) set_max_cols(cap);
  }
  ~MaxColsGuard() { set_max_cols(saved_); }
  MaxColsGuard(const MaxColsGuard&) = delete;
  MaxColsGuard& operator=(const MaxColsGuard&) = delete;

 private:
  std::size_t saved_;
};

}  // namespace sharbly::config
