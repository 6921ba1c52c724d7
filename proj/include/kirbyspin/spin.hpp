#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kirbyspin/framed_link.hpp"
#include "kirbyspin/gf2.hpp"

namespace kirby {

// Membership bit per component of a framed link.  A sublink C is
// characteristic when for every component i,
//   sum over j in C of lk(i, j)  ==  framing(i)   (mod 2),
// i.e. Q x = diag(Q) over GF(2).  These classes are the diagram-side
// bookkeeping for spin structures on the surgered manifold.
struct CharSublink {
  BitVec bits;

  std::size_t size() const { return bits.count(); }
  bool contains(std::size_t i) const { return bits.get(i); }
  bool empty() const { return !bits.any(); }

  bool operator==(const CharSublink&) const = default;
};

CharSublink sublink_of_names(const FramedLink& l, const std::vector<std::string>& names);
std::vector<std::string> sublink_names(const FramedLink& l, const CharSublink& c);

bool is_characteristic(const FramedLink& l, const CharSublink& c);

// Whether the empty sublink is characteristic, i.e. every framing is even
// (the x = 0 case of the condition): an even diagram, whose trace is a spin
// filling of the surgered manifold.
bool empty_is_characteristic(const FramedLink& l);

struct CharSublinkSet {
  // Exact number of characteristic sublinks: 2^(n - rank2(Q)) when the
  // system is solvable, 0 otherwise.
  Int count = 0;
  // True when `sublinks` actually holds all of them; false when the count
  // exceeded the enumeration cap and the list was left empty.
  bool enumerated = false;
  std::vector<CharSublink> sublinks;
};

inline constexpr unsigned long kDefaultEnumCap = 1u << 20;

CharSublinkSet characteristic_sublinks(const FramedLink& l,
                                       unsigned long cap = kDefaultEnumCap);

}  // namespace kirby
