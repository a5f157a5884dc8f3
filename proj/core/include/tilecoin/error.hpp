#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tilecoin {

enum class ErrorCode {
  invalid_word,
  invalid_substitution,
  length_cap_exceeded,
  no_seed_found,
  factorization_failed,
  degree_cap_exceeded,
  division_by_zero,
  eigenvector_defect,
  window_not_covered,
  not_a_submodule,
  empty_window,
  parse_error,
  not_found,
  disagreement_detected,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// the report layer can embed it per check.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tilecoin
