#pragma once

#include <vector>

#include "kirbyspin/framed_link.hpp"

namespace kirby {

// First-homology data of the surgered 3-manifold, read off the Smith normal
// form of the linking matrix.
struct HomologyProfile {
  // One entry per component, nonnegative, each dividing the next, zeros
  // last.  Ones are kept so the length always equals the matrix dimension.
  std::vector<Int> invariant_factors;
  // Number of zero factors (rank of the free part of H1).
  long long b1 = 0;
  // |H1| when finite, 0 when b1 > 0.
  Int order = 1;

  bool operator==(const HomologyProfile&) const = default;
};

HomologyProfile smith_profile(const SymMatrix& m);

inline HomologyProfile smith_normal_form(const FramedLink& l) {
  return smith_profile(l.q);
}

// The part of the profile invariant under every calculus move: torsion
// factors (> 1) plus b1.  Trivial factors are dropped because blow-ups and
// blow-downs add and remove them freely.
HomologyProfile boundary_fingerprint(const FramedLink& l);

}  // namespace kirby
