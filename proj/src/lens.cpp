#include "kirbyspin/lens.hpp"

#include <cstdlib>
#include <string>

#include "kirbyspin/error.hpp"
#include "kirbyspin/spin.hpp"

namespace kirby {

namespace {

// Value of a1 - 1/(a2 - 1/(...)) from the tail inward.  Every partial tail
// of an even expansion has |value| > 1, so the recursion never divides by
// zero; asserted as we fold.
Rat chain_value(const std::vector<Int>& a) {
  Rat v(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    if (abs(v) <= 1)
      throw Error("internal: even chain tail value |" + v.get_str() + "| <= 1");
    Rat inv = 1 / v;
    v = Rat(a[i]) - inv;
  }
  return v;
}

}  // namespace

EvenChain even_chain(const Int& t, const Int& s) {
  if (sgn(s) == 0) throw Error("lens parameter s must be nonzero");
  if (!is_even(s)) throw Error("lens parameter s = " + s.get_str() + " must be even");
  Int g;
  mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), s.get_mpz_t());
  if (g != 1)
    throw Error("lens parameters t = " + t.get_str() + ", s = " + s.get_str() +
                " are not coprime");

  EvenChain out{t, s, {}};
  Int num = t, den = s;
  if (sgn(den) < 0) {
    num = -num;
    den = -den;
  }

  const Int bound = abs_int(s);
  // Remainders alternate parity: odd at even depths (den even there), even
  // at odd depths.  The expansion can only terminate, via |l| = 1, at even
  // depth, which makes the closing quotient -den/l even as required.
  for (std::size_t depth = 0;; ++depth) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int m = is_even(fl) ? fl : fl + 1;
    Int l = num - m * den;
    out.coefficients.push_back(m);
    if ((depth % 2 == 0) != is_odd(l))
      throw Error("internal: remainder parity broke at depth " +
                  std::to_string(depth));
    if (l == 1 || l == -1) {
      Int last = (l == 1) ? Int(-den) : den;
      out.coefficients.push_back(last);
      break;
    }
    num = -den;
    den = l;
    if (sgn(den) < 0) {
      num = -num;
      den = -den;
    }
    if (Int(out.coefficients.size() + 1) > bound)
      throw Error("internal: even expansion of " + t.get_str() + "/" +
                  s.get_str() + " exceeded " + bound.get_str() + " quotients");
  }

  for (const Int& a : out.coefficients)
    if (!is_even(a))
      throw Error("internal: odd quotient " + a.get_str() + " in even expansion");
  Rat want(t, s);
  want.canonicalize();
  if (chain_value(out.coefficients) != want)
    throw Error("internal: even expansion of " + t.get_str() + "/" + s.get_str() +
                " does not evaluate back");
  return out;
}

FramedLink chain_link(const EvenChain& chain) {
  const std::size_t k = chain.coefficients.size();
  SymMatrix m(k);
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("U" + std::to_string(i + 1));
    m.set(i, i, chain.coefficients[i]);
    if (i + 1 < k) m.set(i, i + 1, 1);
  }
  return make_framed_link(std::move(names), std::move(m));
}

FillingInvariants lens_filling_invariants(const Int& t, const Int& s) {
  EvenChain chain = even_chain(t, s);
  FramedLink l = chain_link(chain);
  FillingInvariants out{b2(l), signature(l)};
  if (Int(static_cast<long>(out.b2)) > abs_int(s))
    throw Error("internal: even filling rank exceeds |s|");
  if (std::abs(out.sigma) > out.b2)
    throw Error("internal: |signature| exceeded rank");
  if (!empty_is_characteristic(l))
    throw Error("internal: chain diagram is not even");
  return out;
}

}  // namespace kirby
