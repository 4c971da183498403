#pragma once

namespace jointmeas {

/// Numeric tolerances used by the validation and construction routines.
struct ToleranceConfig {
  double psd_tol = 1e-10;    // lower bound on effect eigenvalues: >= -psd_tol
  double eq_tol = 1e-10;     // normalization / elementwise equality checks
  double exact_tol = 1e-12;  // identities expected at machine precision
  double dot_tol = 1e-9;     // orthogonality guard for sign decisions
};

}  // namespace jointmeas
