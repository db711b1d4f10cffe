#pragma once

#include <stdexcept>
#include <string>

namespace pmpmh {

// Bad tuning parameters or misuse detected before any sampling starts.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mismatched vector lengths.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A model density returned NaN. Densities must evaluate to a finite value
// or -infinity everywhere on the declared support.
class model_definition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grid construction left fewer than two distinct cut points at some time.
class degenerate_grid_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every cell weight vanished while approximating an HMM probability table.
class degenerate_approximation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Forward filtering reached a time point with zero total mass.
class filtering_degeneracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All particle weights vanished during a conditional SMC sweep.
class particle_degeneracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pmpmh
