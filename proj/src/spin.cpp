#include "kirbyspin/spin.hpp"

#include <algorithm>

#include "kirbyspin/error.hpp"

namespace kirby {

namespace {

// Linking matrix reduced mod 2, rows packed.
std::vector<BitVec> parity_rows(const FramedLink& l) {
  const std::size_t n = l.components();
  std::vector<BitVec> rows(n, BitVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (is_odd(l.q.at(i, j))) rows[i].set(j, true);
  return rows;
}

BitVec parity_diagonal(const FramedLink& l) {
  const std::size_t n = l.components();
  BitVec d(n);
  for (std::size_t i = 0; i < n; ++i)
    if (is_odd(l.q.at(i, i))) d.set(i, true);
  return d;
}

}  // namespace

CharSublink sublink_of_names(const FramedLink& l,
                             const std::vector<std::string>& names) {
  CharSublink c{BitVec(l.components())};
  for (const auto& nm : names) {
    auto idx = l.index_of(nm);
    if (!idx) throw Error("unknown component '" + nm + "'");
    c.bits.set(*idx, true);
  }
  return c;
}

std::vector<std::string> sublink_names(const FramedLink& l, const CharSublink& c) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < l.components(); ++i)
    if (c.contains(i)) out.push_back(l.names[i]);
  return out;
}

bool is_characteristic(const FramedLink& l, const CharSublink& c) {
  const std::size_t n = l.components();
  if (c.bits.size() != n)
    throw Error("sublink indexes " + std::to_string(c.bits.size()) +
                " components, link has " + std::to_string(n));
  auto rows = parity_rows(l);
  BitVec want = parity_diagonal(l);
  for (std::size_t i = 0; i < n; ++i) {
    BitVec prod = rows[i];
    // (Q x)_i mod 2 = parity of |row_i AND x|
    std::size_t acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (prod.get(j) && c.bits.get(j)) ++acc;
    if (((acc & 1u) != 0) != want.get(i)) return false;
  }
  return true;
}

bool empty_is_characteristic(const FramedLink& l) {
  return is_characteristic(l, CharSublink{BitVec(l.components())});
}

CharSublinkSet characteristic_sublinks(const FramedLink& l, unsigned long cap) {
  const std::size_t n = l.components();
  CharSublinkSet out;

  Gf2Solution sol = gf2_solve(parity_rows(l), parity_diagonal(l));
  if (!sol.consistent) {
    // Cannot happen for a symmetric integer matrix (the diagonal always
    // lies in the column space mod 2), but keep the honest answer.
    out.count = 0;
    out.enumerated = true;
    return out;
  }

  const std::size_t k = sol.kernel.size();
  out.count = 1;
  out.count <<= k;

  Int capI(std::to_string(cap));
  if (out.count > capI) {
    out.enumerated = false;
    return out;
  }

  out.enumerated = true;
  const std::size_t total = std::size_t(1) << k;
  out.sublinks.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    BitVec x = sol.particular;
    for (std::size_t b = 0; b < k; ++b)
      if ((mask >> b) & 1u) x ^= sol.kernel[b];
    out.sublinks.push_back(CharSublink{std::move(x)});
  }
  // Canonical order: membership bitstrings as binary numbers, low index =
  // low bit.
  std::sort(out.sublinks.begin(), out.sublinks.end(),
            [n](const CharSublink& a, const CharSublink& b) {
              for (std::size_t i = n; i-- > 0;) {
                bool av = a.contains(i), bv = b.contains(i);
                if (av != bv) return bv;
              }
              return false;
            });
  return out;
}

}  // namespace kirby
