#pragma once

#include <cstddef>
#include <vector>

#include "kirbyspin/int_types.hpp"

namespace kirby {

// Dense symmetric integer matrix.  Symmetry is maintained structurally: the
// only mutators write both (i,j) and (j,i).  This is the linking-matrix type,
// so dimensions stay modest (hundreds) while entries may grow large.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * n) {}

  // Builds from explicit rows; rejects ragged or asymmetric input, naming the
  // offending indices.
  static SymMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t dim() const { return n_; }

  const Int& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, Int v) {
    a_[i * n_ + j] = v;
    if (i != j) a_[j * n_ + i] = a_[i * n_ + j];
  }

  void add_at(std::size_t i, std::size_t j, const Int& delta) {
    a_[i * n_ + j] += delta;
    if (i != j) a_[j * n_ + i] = a_[i * n_ + j];
  }

  // Copy with one extra component of the given framing, unlinked from
  // everything (a split unknot's row).
  SymMatrix extended(const Int& diag) const;

  // Copy with row/column k deleted.
  SymMatrix removed(std::size_t k) const;

  // True when component i links nothing else (all off-diagonal entries of
  // row i vanish).
  bool row_split(std::size_t i) const;

  std::vector<std::vector<Int>> rows() const;

  bool operator==(const SymMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Int> a_;
};

// Counts of positive, negative, and zero eigenvalues of the associated real
// quadratic form, computed exactly over the integers.
struct Inertia {
  long long positive = 0;
  long long negative = 0;
  long long zero = 0;

  bool operator==(const Inertia&) const = default;
};

Inertia inertia(const SymMatrix& m);

inline long long signature_of(const Inertia& in) { return in.positive - in.negative; }

long long signature(const SymMatrix& m);

Int determinant(const SymMatrix& m);

}  // namespace kirby
