#pragma once

#include <stdexcept>
#include <string>

namespace contest {

// Error categories surfaced by the library. Each maps to one of the
// documented failure modes of the public operations.
enum class errc {
  domain,                   // argument outside the stated domain
  invalid_reward,           // shape violations: not decreasing, negative, ...
  last_rank_discontinuity,  // R(1-) > R(1)
  constant_reward,
  invalid_distribution,
  drift_too_large,          // mu >= drift threshold for the given reward
  infeasible_target,
  divergent_integral,
  out_of_range,
  exact_mode_cap,           // n beyond the O(n^2) exact-mode limit
  no_jump,
  bracket_violated,
  unsupported,
  bad_config,
  io_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace contest
