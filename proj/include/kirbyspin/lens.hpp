#pragma once

#include <vector>

#include "kirbyspin/framed_link.hpp"

namespace kirby {

// Even negative-continued-fraction expansion
//   t/s = a1 - 1/(a2 - 1/(... - 1/ak))
// with every quotient a_i even.  Surgery on the corresponding chain link
// gives the lens space L(s, t)'s even filling: the canonical spin 4-manifold
// bounded by the lens space when s is even.
struct EvenChain {
  Int t, s;
  std::vector<Int> coefficients;
};

// Requires s even and nonzero, gcd(t, s) = 1 (t odd follows).  The expansion
// exists, uses at most |s| quotients, and is verified against t/s before it
// is returned.
EvenChain even_chain(const Int& t, const Int& s);

// Chain link U1-...-Uk with framings the chain coefficients and consecutive
// components linking once: the tridiagonal surgery diagram of L(s, t).
FramedLink chain_link(const EvenChain& chain);

// (b2, signature) of the even filling; b2 <= |s| and |sigma| <= b2, and the
// empty sublink of the chain diagram is characteristic (all framings even).
FillingInvariants lens_filling_invariants(const Int& t, const Int& s);

}  // namespace kirby
