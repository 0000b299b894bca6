#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace harris {

enum class Errc {
  invalid_parameter,
  domain_error,
  divergence,
  step_too_large,
  zero_constant_term,
  degenerate_sample,
  mean_at_boundary,
  no_root_in_bracket,
  multiple_roots,
  all_at_origin,
};

/// Stable snake_case name, used verbatim in CLI diagnostics.
std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace harris
