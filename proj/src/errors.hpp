#pragma once

#include <stdexcept>
#include <string>

namespace toss {

struct toss_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// weight tuple violates the tameness bound sum(1/w_i) > l - 2
struct not_tame_error : toss_error {
  using toss_error::toss_error;
};

struct parse_error : toss_error {
  using toss_error::toss_error;
};

struct invalid_tsd_error : toss_error {
  using toss_error::toss_error;
};

struct dimension_mismatch_error : toss_error {
  using toss_error::toss_error;
};

struct singular_matrix_error : toss_error {
  using toss_error::toss_error;
};

// a central charge vanished where the contract requires it nonzero
struct zero_charge_error : toss_error {
  using toss_error::toss_error;
};

struct degenerate_error : toss_error {
  using toss_error::toss_error;
};

struct weight_mismatch_error : toss_error {
  using toss_error::toss_error;
};

// flow base point must have Im(z) > 0
struct not_nonconcentrated_error : toss_error {
  using toss_error::toss_error;
};

struct nonpositive_rank_error : toss_error {
  using toss_error::toss_error;
};

struct too_many_variables_error : toss_error {
  using toss_error::toss_error;
};

// a structural invariant failed; indicates a bug, not bad input
struct internal_error : toss_error {
  using toss_error::toss_error;
};

}  // namespace toss
