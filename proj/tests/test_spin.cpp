#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kirbyspin/error.hpp"
#include "kirbyspin/homology.hpp"
#include "kirbyspin/spin.hpp"

using namespace kirby;
using namespace kirby::testing;

namespace {

CharSublink of_mask(std::size_t n, unsigned long mask) {
  CharSublink c{BitVec(n)};
  for (std::size_t i = 0; i < n; ++i) c.bits.set(i, (mask >> i) & 1);
  return c;
}

unsigned long mask_of(const CharSublink& c) {
  unsigned long m = 0;
  for (std::size_t i = 0; i < c.bits.size(); ++i)
    if (c.contains(i)) m |= 1ul << i;
  return m;
}

}  // namespace

// ===========================================================================
// The characteristic condition on fixed diagrams
// ===========================================================================

TEST_CASE("single components of the (1,1) chain are characteristic") {
  FramedLink l = link_of({{1, 1}, {1, 1}});
  CHECK(is_characteristic(l, of_mask(2, 0b01)));
  CHECK(is_characteristic(l, of_mask(2, 0b10)));
  CHECK_FALSE(is_characteristic(l, of_mask(2, 0b00)));
  CHECK_FALSE(is_characteristic(l, of_mask(2, 0b11)));
}

TEST_CASE("the blown-up torus pattern keeps its target characteristic") {
  // [[f - n^2, -n], [-n, -1]] with f odd, n odd: the first component alone
  // satisfies the condition; this is the shape the across-move produces.
  for (long f : {1L, 3L, -5L})
    for (long n : {1L, 3L, 5L}) {
      FramedLink l = link_of({{f - n * n, -n}, {-n, -1}});
      CAPTURE(f);
      CAPTURE(n);
      CHECK(is_characteristic(l, of_mask(2, 0b01)));
    }
}

TEST_CASE("empty sublink is characteristic exactly for even diagrams") {
  CHECK(empty_is_characteristic(link_of({{0}})));
  CHECK(empty_is_characteristic(link_of({{2, 0}, {0, 4}})));
  CHECK(empty_is_characteristic(link_of({{2, 1}, {1, -2}})));
  CHECK_FALSE(empty_is_characteristic(link_of({{1, 1}, {1, 1}})));
}

TEST_CASE("name-based sublink construction round-trips") {
  FramedLink l = link_of({{1, 1, 0}, {1, 1, 0}, {0, 0, 2}});
  CharSublink c = sublink_of_names(l, {"C2"});
  CHECK(c.contains(1));
  CHECK(c.size() == 1);
  CHECK(sublink_names(l, c) == std::vector<std::string>{"C2"});
  CHECK_THROWS_AS(sublink_of_names(l, {"nope"}), Error);
}

// ===========================================================================
// Full enumeration
// ===========================================================================

TEST_CASE("characteristic sublinks of the named examples") {
  CharSublinkSet s = characteristic_sublinks(link_of({{1, 1}, {1, 1}}));
  CHECK(s.count == 2);
  REQUIRE(s.enumerated);
  REQUIRE(s.sublinks.size() == 2);
  CHECK(mask_of(s.sublinks[0]) + mask_of(s.sublinks[1]) == 0b11);

  s = characteristic_sublinks(link_of({{2, 0}, {0, 4}}));
  CHECK(s.count == 4);  // every sublink of an even split diagram
  bool has_empty = false;
  for (const auto& c : s.sublinks) has_empty |= c.empty();
  CHECK(has_empty);

  s = characteristic_sublinks(link_of({{1}}));
  CHECK(s.count == 1);
  REQUIRE(s.sublinks.size() == 1);
  CHECK(mask_of(s.sublinks[0]) == 1);
}

TEST_CASE("enumeration is refused above the cap but the count survives") {
  // 21 split 0-framed unknots: all 2^21 sublinks are characteristic.
  std::vector<std::vector<long>> rows(21, std::vector<long>(21, 0));
  CharSublinkSet s = characteristic_sublinks(link_of(rows));
  CHECK(s.count == Int(1) << 21);
  CHECK_FALSE(s.enumerated);
  CHECK(s.sublinks.empty());

  // a custom cap tightens the same cutoff
  s = characteristic_sublinks(link_of({{2, 0}, {0, 4}}), 3);
  CHECK(s.count == 4);
  CHECK_FALSE(s.enumerated);
}

TEST_CASE("solver agrees with the 2^n oracle and the homology count") {
  std::mt19937_64 rng(160922);
  std::uniform_int_distribution<std::size_t> dim(1, 10);
  for (int round = 0; round < 250; ++round) {
    std::size_t n = dim(rng);
    SymMatrix q = random_symmetric(rng, n, 4);
    FramedLink l = make_framed_link(names_for(n), q);
    CharSublinkSet s = characteristic_sublinks(l);
    std::vector<unsigned long> brute = brute_characteristic(q);

    CAPTURE(round);
    REQUIRE(s.enumerated);
    REQUIRE(!s.sublinks.empty());  // the system is always solvable
    REQUIRE(s.sublinks.size() == brute.size());
    std::vector<unsigned long> got;
    for (const auto& c : s.sublinks) got.push_back(mask_of(c));
    std::sort(got.begin(), got.end());
    CHECK(got == brute);

    // |spin structures| = |H^1(M; Z/2)| = 2^(b1 + #even torsion factors)
    HomologyProfile h = smith_normal_form(l);
    long long exponent = h.b1;
    for (const Int& f : h.invariant_factors)
      if (sgn(f) != 0 && is_even(f)) ++exponent;
    CHECK(s.count == Int(1) << exponent);
  }
}

TEST_CASE("every enumerated sublink passes the definition directly") {
  std::mt19937_64 rng(31337);
  for (int round = 0; round < 100; ++round) {
    std::size_t n = 1 + round % 8;
    FramedLink l = make_framed_link(names_for(n), random_symmetric(rng, n, 6));
    for (const auto& c : characteristic_sublinks(l).sublinks)
      CHECK(is_characteristic(l, c));
  }
}
