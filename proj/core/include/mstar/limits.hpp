#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mstar {

/// Thrown when a verification request exceeds a configured resource bound.
/// Distinct from domain errors: the request is well-formed, just refused.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bounds on what the verifiers are willing to materialize.
struct ResourceLimits {
  /// Densest matrix allowed, measured in cells (dim^2). A check that would
  /// build a matrix with dim^2 > max_cells refuses instead of running.
  /// Overridable through the RMATRIX_MAX_CELLS environment variable.
  std::int64_t max_cells = std::int64_t{1} << 24;

  /// Cap on the product a*b*c accepted by the weak-coassociativity checker;
  /// the number of matrix units it enumerates grows as (a*b*c)^2.
  std::int64_t wcs_max_product = 512;

  /// Process-wide defaults, with RMATRIX_MAX_CELLS applied once at startup.
  static const ResourceLimits& defaults();

  void require_cells(std::int64_t dim, const std::string& what) const;
};

}  // namespace mstar
