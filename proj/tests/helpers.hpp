#pragma once

// Shared fixtures for the test binaries: tiny builders for links and
// matrices, deterministic fuzz generators, and independent oracles that
// recompute what the library computes by an unrelated algorithm.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "kirbyspin/framed_link.hpp"
#include "kirbyspin/matrix.hpp"

namespace kirby::testing {

inline std::vector<std::vector<Int>> rows_of(
    const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

inline SymMatrix sym(const std::vector<std::vector<long>>& rows) {
  return SymMatrix::from_rows(rows_of(rows));
}

inline std::vector<std::string> names_for(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("C" + std::to_string(i + 1));
  return out;
}

inline FramedLink link_of(const std::vector<std::vector<long>>& rows) {
  return make_framed_link(names_for(rows.size()), sym(rows));
}

// ---------------------------------------------------------------------------
// Fuzz generators.  Every test seeds its own engine so failures replay.
// ---------------------------------------------------------------------------

inline SymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n,
                                  long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Int v(d(rng));
      rows[i][j] = v;
      rows[j][i] = v;
    }
  return SymMatrix::from_rows(rows);
}

// Random congruence Q -> E^T Q E with E a product of elementary unimodular
// matrices (transvections, swaps, sign flips).  Exactly the change-of-basis
// group the move engine works in, so everything it conserves must survive.
inline SymMatrix random_congruent(std::mt19937_64& rng, const SymMatrix& m,
                                  int steps) {
  std::vector<std::vector<Int>> r = m.rows();
  const std::size_t n = r.size();
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 2), coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    switch (kind(rng)) {
      case 0: {  // row/col i += c * row/col j
        Int c(coef(rng));
        for (std::size_t k = 0; k < n; ++k) r[i][k] += c * r[j][k];
        for (std::size_t k = 0; k < n; ++k) r[k][i] += c * r[k][j];
        break;
      }
      case 1:
        std::swap(r[i], r[j]);
        for (std::size_t k = 0; k < n; ++k) std::swap(r[k][i], r[k][j]);
        break;
      default:
        for (std::size_t k = 0; k < n; ++k) r[i][k] = -r[i][k];
        for (std::size_t k = 0; k < n; ++k) r[k][i] = -r[k][i];
        break;
    }
  }
  return SymMatrix::from_rows(r);
}

// ---------------------------------------------------------------------------
// Oracles.  Deliberately different algorithms from the library's.
// ---------------------------------------------------------------------------

// Characteristic polynomial det(lambda I - A) by the Faddeev-LeVerrier
// recurrence; every division is exact over the integers.  Returns
// coefficients [1, c1, ..., cn] for lambda^n ... lambda^0.
inline std::vector<Int> char_poly(const SymMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Int> c{1};
  std::vector<Int> m(n * n);  // running matrix M_k
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a.at(i, j);
  for (std::size_t k = 1; k <= n; ++k) {
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m[i * n + i];
    Int ck = -tr / Int(static_cast<long>(k));
    c.push_back(ck);
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += ck;
    std::vector<Int> next(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        Int acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += a.at(i, j) * m[j * n + l];
        next[i * n + l] = std::move(acc);
      }
    m = std::move(next);
  }
  return c;
}

// Signature from the characteristic polynomial: a real symmetric matrix has
// only real eigenvalues, so Descartes' rule is exact on its coefficient
// sequence.  Zero eigenvalues are the trailing zero coefficients.
inline long long signature_oracle(const SymMatrix& a) {
  std::vector<Int> c = char_poly(a);
  std::size_t zeros = 0;
  while (zeros < a.dim() && sgn(c[c.size() - 1 - zeros]) == 0) ++zeros;
  long long pos = 0;
  int last = 1;  // leading coefficient
  for (std::size_t k = 1; k + zeros < c.size(); ++k) {
    int s = sgn(c[k]);
    if (s == 0) continue;
    if (s != last) ++pos;
    last = s;
  }
  long long nonzero = static_cast<long long>(a.dim() - zeros);
  return pos - (nonzero - pos);
}

// Laplace cofactor expansion; exponential, for cross-checking small dets.
inline Int det_oracle_rows(const std::vector<std::vector<Int>>& r) {
  const std::size_t n = r.size();
  if (n == 0) return 1;
  if (n == 1) return r[0][0];
  Int acc = 0;
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(r[i][k]);
      minor.push_back(std::move(row));
    }
    acc += sign * r[0][j] * det_oracle_rows(minor);
    sign = -sign;
  }
  return acc;
}

inline Int det_oracle(const SymMatrix& m) { return det_oracle_rows(m.rows()); }

// All characteristic membership vectors of Q by checking every one of the
// 2^n subsets against the definition, parities precomputed per row.
inline std::vector<unsigned long> brute_characteristic(const SymMatrix& q) {
  const std::size_t n = q.dim();
  std::vector<unsigned long> row_bits(n, 0), solutions;
  unsigned long diag_bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (is_odd(q.at(i, j))) row_bits[i] |= 1ul << j;
    if (is_odd(q.at(i, i))) diag_bits |= 1ul << i;
  }
  for (unsigned long x = 0; x < (1ul << n); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      unsigned long hit = row_bits[i] & x;
      int parity = __builtin_parityl(hit);
      ok = parity == (int)((diag_bits >> i) & 1);
    }
    if (ok) solutions.push_back(x);
  }
  return solutions;
}

}  // namespace kirby::testing
