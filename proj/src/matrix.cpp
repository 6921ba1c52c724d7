#include "kirbyspin/matrix.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "kirbyspin/error.hpp"

namespace kirby {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Shared elimination for inertia and determinant.
//
// Fraction-free symmetric congruence reduction: the working matrix always
// equals prev * (Schur complement of the pivots consumed so far), with prev
// the previous pivot value and every entry an integer.  Each pivot therefore
// contributes sgn(pivot * prev) to the inertia, the update
//   S[j][k] <- (pivot * S[j][k] - S[j][pivot] * S[pivot][k]) / prev
// divides exactly, and the pivot values telescope so the final one is the
// determinant.  When every remaining diagonal entry vanishes but some
// off-diagonal d does not, a unimodular congruence (add row+column j into
// row+column i) manufactures the diagonal entry 2d without disturbing either
// the Schur-complement invariant or the inertia.
struct Elimination {
  Inertia in;
  Int det;  // 0 when the form is singular
};

Elimination eliminate(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Int> s(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i * n + j] = m.at(i, j);
  auto S = [&](std::size_t i, std::size_t j) -> Int& { return s[i * n + j]; };

  std::vector<std::size_t> act(n);
  for (std::size_t i = 0; i < n; ++i) act[i] = i;

  Elimination out;
  Int prev = 1;
  while (!act.empty()) {
    // Smallest |diagonal| pivot keeps intermediate entries small on the
    // near-unimodular matrices the calculus produces.
    std::size_t pi = npos;
    for (std::size_t idx : act) {
      if (sgn(S(idx, idx)) == 0) continue;
      if (pi == npos ||
          mpz_cmpabs(S(idx, idx).get_mpz_t(), S(pi, pi).get_mpz_t()) < 0)
        pi = idx;
    }

    if (pi == npos) {
      // No usable diagonal.  Find a nonzero off-diagonal coupling; if there
      // is none the remaining block is identically zero.
      std::size_t ti = npos, tj = npos;
      for (std::size_t a = 0; a < act.size() && ti == npos; ++a)
        for (std::size_t b = a + 1; b < act.size(); ++b)
          if (sgn(S(act[a], act[b])) != 0) {
            ti = act[a];
            tj = act[b];
            break;
          }
      if (ti == npos) {
        out.in.zero += static_cast<long long>(act.size());
        out.det = 0;
        return out;
      }
      Int d = S(ti, tj);
      Int new_diag = S(ti, ti) + 2 * d + S(tj, tj);
      for (std::size_t idx : act) {
        if (idx == ti) continue;
        S(ti, idx) += S(tj, idx);
        S(idx, ti) = S(ti, idx);
      }
      S(ti, ti) = new_diag;
      continue;
    }

    Int piv = S(pi, pi);
    if (sgn(piv) * sgn(prev) > 0)
      ++out.in.positive;
    else
      ++out.in.negative;

    std::vector<std::size_t> rest;
    rest.reserve(act.size() - 1);
    for (std::size_t idx : act)
      if (idx != pi) rest.push_back(idx);

    Int t;
    for (std::size_t a = 0; a < rest.size(); ++a) {
      for (std::size_t b = a; b < rest.size(); ++b) {
        std::size_t j = rest[a], k = rest[b];
        t = piv * S(j, k) - S(j, pi) * S(pi, k);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        S(j, k) = t;
        S(k, j) = t;
      }
    }
    prev = piv;
    act = std::move(rest);
  }
  out.det = prev;  // dim 0 falls through with the empty product
  return out;
}

}  // namespace

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error("matrix row " + std::to_string(i) + " has " +
                  std::to_string(rows[i].size()) + " entries, expected " +
                  std::to_string(n));
  }
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i])
        throw Error("matrix not symmetric at [" + std::to_string(i) + "][" +
                    std::to_string(j) + "]");
      m.a_[i * n + j] = rows[i][j];
    }
  return m;
}

SymMatrix SymMatrix::extended(const Int& diag) const {
  SymMatrix r(n_ + 1);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.a_[i * (n_ + 1) + j] = a_[i * n_ + j];
  r.a_[n_ * (n_ + 1) + n_] = diag;
  return r;
}

SymMatrix SymMatrix::removed(std::size_t k) const {
  SymMatrix r(n_ - 1);
  for (std::size_t i = 0, ri = 0; i < n_; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, rj = 0; j < n_; ++j) {
      if (j == k) continue;
      r.a_[ri * (n_ - 1) + rj] = a_[i * n_ + j];
      ++rj;
    }
    ++ri;
  }
  return r;
}

bool SymMatrix::row_split(std::size_t i) const {
  for (std::size_t j = 0; j < n_; ++j)
    if (j != i && sgn(a_[i * n_ + j]) != 0) return false;
  return true;
}

std::vector<std::vector<Int>> SymMatrix::rows() const {
  std::vector<std::vector<Int>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }
  return out;
}

Inertia inertia(const SymMatrix& m) { return eliminate(m).in; }

long long signature(const SymMatrix& m) { return signature_of(eliminate(m).in); }

Int determinant(const SymMatrix& m) { return eliminate(m).det; }

}  // namespace kirby
