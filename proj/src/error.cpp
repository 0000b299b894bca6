#include "harris/error.hpp"

namespace harris {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_parameter: return "invalid_parameter";
    case Errc::domain_error: return "domain_error";
    case Errc::divergence: return "divergence";
    case Errc::step_too_large: return "step_too_large";
    case Errc::zero_constant_term: return "zero_constant_term";
    case Errc::degenerate_sample: return "degenerate_sample";
    case Errc::mean_at_boundary: return "mean_at_boundary";
    case Errc::no_root_in_bracket: return "no_root_in_bracket";
    case Errc::multiple_roots: return "multiple_roots";
    case Errc::all_at_origin: return "all_at_origin";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace harris
