#include "kirbyspin/homology.hpp"

#include <limits>

namespace kirby {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Dense working copy with unrestricted row/column operations (Smith
// reduction is a two-sided equivalence, not a congruence, so symmetry is
// lost immediately).
struct Work {
  std::size_t n;
  std::vector<Int> a;

  explicit Work(const SymMatrix& m) : n(m.dim()), a(n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);
  }
  Int& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(at(i, k), at(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(at(k, i), at(k, j));
  }
  // row i -= c * row j, columns >= from
  void row_sub(std::size_t i, const Int& c, std::size_t j, std::size_t from) {
    for (std::size_t k = from; k < n; ++k) at(i, k) -= c * at(j, k);
  }
  void col_sub(std::size_t i, const Int& c, std::size_t j, std::size_t from) {
    for (std::size_t k = from; k < n; ++k) at(k, i) -= c * at(k, j);
  }
  void row_add(std::size_t i, std::size_t j, std::size_t from) {
    for (std::size_t k = from; k < n; ++k) at(i, k) += at(j, k);
  }
};

}  // namespace

HomologyProfile smith_profile(const SymMatrix& m) {
  Work w(m);
  const std::size_t n = w.n;
  HomologyProfile out;

  for (std::size_t pos = 0; pos < n; ++pos) {
    for (;;) {
      // Smallest nonzero |entry| of the trailing block becomes the pivot;
      // small pivots keep the reduction's intermediate entries in check.
      std::size_t pi = npos, pj = npos;
      for (std::size_t i = pos; i < n; ++i)
        for (std::size_t j = pos; j < n; ++j) {
          if (sgn(w.at(i, j)) == 0) continue;
          if (pi == npos ||
              mpz_cmpabs(w.at(i, j).get_mpz_t(), w.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == npos) {
        // trailing block vanished: the rest of the factors are zero
        for (std::size_t i = pos; i < n; ++i) out.invariant_factors.push_back(0);
        pos = n;
        break;
      }
      w.swap_rows(pos, pi);
      w.swap_cols(pos, pj);

      bool dirty = false;
      for (std::size_t i = pos + 1; i < n; ++i) {
        if (sgn(w.at(i, pos)) == 0) continue;
        Int c = nearest_quotient(w.at(i, pos), w.at(pos, pos));
        w.row_sub(i, c, pos, pos);
        if (sgn(w.at(i, pos)) != 0) dirty = true;
      }
      for (std::size_t j = pos + 1; j < n; ++j) {
        if (sgn(w.at(pos, j)) == 0) continue;
        Int c = nearest_quotient(w.at(pos, j), w.at(pos, pos));
        w.col_sub(j, c, pos, pos);
        if (sgn(w.at(pos, j)) != 0) dirty = true;
      }
      if (dirty) continue;  // leftovers are smaller than the pivot; reselect

      // Row and column are clear.  The pivot must also divide the trailing
      // block; fold a non-multiple row in and keep reducing until it does.
      std::size_t oi = npos;
      for (std::size_t i = pos + 1; i < n && oi == npos; ++i)
        for (std::size_t j = pos + 1; j < n; ++j)
          if (!mpz_divisible_p(w.at(i, j).get_mpz_t(), w.at(pos, pos).get_mpz_t())) {
            oi = i;
            break;
          }
      if (oi == npos) break;
      w.row_add(pos, oi, pos);
    }
    if (pos >= n) break;
    out.invariant_factors.push_back(abs_int(w.at(pos, pos)));
  }

  for (const Int& f : out.invariant_factors) {
    if (sgn(f) == 0) ++out.b1;
  }
  if (out.b1 > 0) {
    out.order = 0;
  } else {
    out.order = 1;
    for (const Int& f : out.invariant_factors) out.order *= f;
  }
  return out;
}

HomologyProfile boundary_fingerprint(const FramedLink& l) {
  HomologyProfile full = smith_normal_form(l);
  HomologyProfile out;
  for (const Int& f : full.invariant_factors)
    if (f > 1) out.invariant_factors.push_back(f);
  out.b1 = full.b1;
  out.order = full.order;
  return out;
}

}  // namespace kirby
