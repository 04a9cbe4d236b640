#pragma once

#include <stdexcept>
#include <string>

namespace planch {

enum class Errc {
  non_monotonic,
  non_positive_part,
  cap_exceeded,
  empty_range,
  size_mismatch,
  duplicate_entry,
  window_too_large,
  eigenvalue_out_of_range,
  table_too_small,
  duplicate_point,
  too_many_points,
  radius_order_violated,
  interval_beyond_edge,
  too_few_samples,
  degenerate_design,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Guard violations are numeric-domain failures (CLI exit code 3); everything
/// else is a usage error (exit code 2).
inline bool is_numeric_guard(Errc c) noexcept {
  switch (c) {
    case Errc::eigenvalue_out_of_range:
    case Errc::table_too_small:
    case Errc::radius_order_violated:
    case Errc::interval_beyond_edge:
      return true;
    default:
      return false;
  }
}

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace planch
