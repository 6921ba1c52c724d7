#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kirbyspin/matrix.hpp"

namespace kirby {

// A framed link presented by its linking matrix: component names index the
// rows, framings sit on the diagonal, pairwise linking numbers off it.
// validate() enforces the representation invariants; every constructor path
// (JSON, builders, moves) goes through it.
struct FramedLink {
  std::vector<std::string> names;
  SymMatrix q;

  std::size_t components() const { return names.size(); }

  std::optional<std::size_t> index_of(const std::string& name) const;

  // Throws when names are duplicated/empty or the matrix dimension does not
  // match the component count.
  void validate() const;

  bool operator==(const FramedLink&) const = default;
};

FramedLink make_framed_link(std::vector<std::string> names, SymMatrix q);

// Second Betti number of the 4-manifold the surgery diagram traces out: one
// 2-handle per component.
inline long long b2(const FramedLink& l) {
  return static_cast<long long>(l.components());
}

inline long long signature(const FramedLink& l) { return signature(l.q); }
inline Int determinant(const FramedLink& l) { return determinant(l.q); }

// The (b2, signature) pair of a 4-manifold bounding the surgered 3-manifold.
struct FillingInvariants {
  long long b2 = 0;
  long long sigma = 0;

  bool operator==(const FillingInvariants&) const = default;
};

// Two-component chain K1-K2 with framings p and q and a single clasp:
// linking matrix [[p,1],[1,q]].  Surgery presentation of the union of two
// torus-knot traces used by the obstruction driver.
FramedLink l_n_trace(const Int& p, const Int& q);

}  // namespace kirby
