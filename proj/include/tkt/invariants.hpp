#ifndef TKT_INVARIANTS_HPP
#define TKT_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "tkt/braid.hpp"
#include "tkt/laurent.hpp"

namespace tkt {

/// Point in cylindrical coordinates.
struct CylPoint {
  double rho;
  double theta;
  double z;
};

struct TransversalityResult {
  bool transverse;
  int witness_segment;  // first violating segment index, -1 when transverse
};

/// Discretized positivity of rho^2 dtheta + dz along a closed polygonal curve:
/// for every segment, mean_rho^2 * dtheta + dz > eps. Throws DegenerateSegment.
TransversalityResult transversality_check(const std::vector<CylPoint>& curve,
                                          double eps = 0.0);

/// Alexander polynomial of the closure of w, via the reduced Burau matrix:
///   alexander(w) = det(B(w) - I) * (1 - t) / (1 - t^n),
/// normalized so that f(t) = f(1/t) and f(1) = 1. Throws NotAKnot when the
/// closure has more than one component.
LaurentPoly alexander(const BraidWord& w);

/// Reduced Burau matrix of the word, (n-1)x(n-1), row-major.
std::vector<std::vector<LaurentPoly>> reduced_burau(const BraidWord& w);

}  // namespace tkt

#endif
