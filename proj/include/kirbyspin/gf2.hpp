#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kirby {

// Bit vector packed into 64-bit words; the mod-2 workhorse behind
// characteristic-sublink computations.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  std::size_t count() const;
  bool any() const;

  void push_back(bool v);
  void erase(std::size_t i);

  bool operator==(const BitVec&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Solution set of a linear system over GF(2): one particular solution plus a
// kernel basis, or inconsistency.
struct Gf2Solution {
  bool consistent = false;
  BitVec particular;
  std::vector<BitVec> kernel;
};

Gf2Solution gf2_solve(std::vector<BitVec> rows, BitVec rhs);

std::size_t gf2_rank(std::vector<BitVec> rows);

}  // namespace kirby
