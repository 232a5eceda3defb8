#pragma once

#include <stdexcept>
#include <string>

namespace pcm {

/// Failure categories for matrix construction, derivation and index evaluation.
/// The printable names are part of the CLI contract (they appear verbatim in
/// error output).
enum class Errc {
  not_square,
  order_too_small,
  non_positive_entry,
  reciprocity_violated,
  diagonal_not_one,
  order_mismatch,
  index_out_of_range,
  diagonal_perturbation,
  invalid_sigma,
  parse_error,
  no_convergence,
  missing_random_index,
  entries_out_of_scale,
  invalid_triad_weights,
  invalid_epsilon,
  invalid_argument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pcm
