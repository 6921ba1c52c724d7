#include "kirbyspin/gf2.hpp"

#include <bit>
#include <limits>

namespace kirby {

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVec::any() const {
  for (std::uint64_t w : w_)
    if (w) return true;
  return false;
}

void BitVec::push_back(bool v) {
  ++n_;
  if (w_.size() * 64 < n_) w_.push_back(0);
  set(n_ - 1, v);
}

void BitVec::erase(std::size_t i) {
  for (std::size_t k = i + 1; k < n_; ++k) set(k - 1, get(k));
  set(n_ - 1, false);
  --n_;
  if ((n_ + 63) / 64 < w_.size()) w_.pop_back();
}

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

Gf2Solution gf2_solve(std::vector<BitVec> rows, BitVec rhs) {
  const std::size_t m = rows.size();
  const std::size_t n = m > 0 ? rows[0].size() : 0;

  // Reduced row echelon form with an augmented bit carried alongside.
  std::vector<bool> aug(m);
  for (std::size_t i = 0; i < m; ++i) aug[i] = i < rhs.size() ? rhs.get(i) : false;

  std::vector<std::size_t> pivot_col;  // per echelon row
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t r = npos;
    for (std::size_t i = rank; i < m; ++i)
      if (rows[i].get(c)) {
        r = i;
        break;
      }
    if (r == npos) continue;
    std::swap(rows[rank], rows[r]);
    std::swap(aug[rank], aug[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != rank && rows[i].get(c)) {
        rows[i] ^= rows[rank];
        aug[i] = aug[i] != aug[rank];
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }

  Gf2Solution out;
  for (std::size_t i = rank; i < m; ++i)
    if (aug[i]) return out;  // 0 = 1 row: inconsistent
  out.consistent = true;

  out.particular = BitVec(n);
  for (std::size_t r = 0; r < rank; ++r) out.particular.set(pivot_col[r], aug[r]);

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(n);
    v.set(f, true);
    // RREF row r reads x[pivot_col[r]] + sum over free cols = aug; setting
    // free var f to 1 forces x[pivot_col[r]] = coefficient of f in row r.
    for (std::size_t r = 0; r < rank; ++r)
      if (rows[r].get(f)) v.set(pivot_col[r], true);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t gf2_rank(std::vector<BitVec> rows) {
  const std::size_t m = rows.size();
  if (m == 0) return 0;
  const std::size_t n = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t r = npos;
    for (std::size_t i = rank; i < m; ++i)
      if (rows[i].get(c)) {
        r = i;
        break;
      }
    if (r == npos) continue;
    std::swap(rows[rank], rows[r]);
    for (std::size_t i = rank + 1; i < m; ++i)
      if (rows[i].get(c)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace kirby
