#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kirbyspin/framed_link.hpp"
#include "kirbyspin/spin.hpp"

namespace kirby {

// --- script statements ------------------------------------------------------
//
// Elementary moves mutate the diagram; macros expand to elementary moves;
// asserts are pure checks.  All of them appear in scripts, but a state's
// history records only elementary moves and asserts, so replaying a history
// never double-applies a macro.

struct BlowUp {
  int sign = 1;  // +1 or -1: framing of the new split unknot
  std::string name;
  bool operator==(const BlowUp&) const = default;
};

struct BlowDown {
  std::string name;
  bool operator==(const BlowDown&) const = default;
};

struct Slide {
  std::string moving;
  int sign = 1;  // handle slide: row/column of `moving` gains sign * `over`
  std::string over;
  bool operator==(const Slide&) const = default;
};

// Blow up a sign-framed unknot and slide `target` over it `|multiplicity|`
// times, producing linking multiplicity with the new curve and shifting the
// target's framing by sign * multiplicity^2.  The new curve must end up
// outside the characteristic sublink, which forces odd multiplicity across a
// characteristic target.
struct BlowUpAcross {
  std::string target;
  Int multiplicity;
  int sign = -1;
  std::string name;
  bool operator==(const BlowUpAcross&) const = default;
};

// Trade a characteristic component of odd framing f for n^2 - f + 1 new
// components (n odd, n^2 > f + 1): blow up across with multiplicity n, walk
// the framing up to -1 with +1 blow-ups and slides, unlink the neighbours,
// and blow the component down.
struct RemoveTorus {
  std::string target;
  Int n;
  bool operator==(const RemoveTorus&) const = default;
};

struct AssertStmt {
  enum class Kind { Characteristic, B2, Sigma, CharSet, EmptyChar };
  Kind kind = Kind::Characteristic;
  Int value;                       // B2 / Sigma
  std::vector<std::string> names;  // CharSet
  bool operator==(const AssertStmt&) const = default;
};

using Move = std::variant<BlowUp, BlowDown, Slide, BlowUpAcross, RemoveTorus, AssertStmt>;

// Signed counts of blow-ups/downs executed; the ledger that predicts how the
// signature moves while every other surgery invariant stays put.
struct MoveTally {
  long long up_pos = 0;
  long long up_neg = 0;
  long long down_pos = 0;
  long long down_neg = 0;
  bool operator==(const MoveTally&) const = default;
};

// How eagerly conserved quantities are re-verified while a script runs.
// Legality preconditions and the characteristic condition are always checked
// after every move; determinant/homology/signature/spin-count conservation
// is O(dim^3), so Auto re-checks it per move only while the diagram is small
// and always at script entry/exit.
struct CheckPolicy {
  enum class Conservation { Auto, EveryMove, Endpoints };
  Conservation conservation = Conservation::Auto;
  std::size_t small_dim = 32;

  static CheckPolicy strict() { return {Conservation::EveryMove, 0}; }
  static CheckPolicy endpoints_only() { return {Conservation::Endpoints, 0}; }
};

// A framed link together with a characteristic sublink, the move tally, and
// the elementary-move history that produced it.  Immutable from outside;
// moves return new states.
class CalculusState {
 public:
  CalculusState(FramedLink link, CharSublink chr);
  // Rehydrates a previously emitted state, tally and history included.
  CalculusState(FramedLink link, CharSublink chr, MoveTally tally,
                std::vector<Move> history);

  const FramedLink& link() const { return link_; }
  const CharSublink& char_sublink() const { return char_; }
  const MoveTally& tally() const { return tally_; }
  const std::vector<Move>& history() const { return history_; }

  long long b2() const { return kirby::b2(link_); }
  long long sigma() const;  // exact signature, cached per state
  FillingInvariants filling_invariants() const { return {b2(), sigma()}; }

 private:
  friend class MoveEngine;

  FramedLink link_;
  CharSublink char_;
  MoveTally tally_;
  std::vector<Move> history_;
  mutable std::optional<long long> sigma_cache_;
};

CalculusState blow_up(const CalculusState& s, int sign, const std::string& name,
                      const CheckPolicy& policy = {});
CalculusState blow_down(const CalculusState& s, const std::string& name,
                        const CheckPolicy& policy = {});
CalculusState slide(const CalculusState& s, const std::string& moving, int sign,
                    const std::string& over, const CheckPolicy& policy = {});
CalculusState blow_up_across(const CalculusState& s, const std::string& target,
                             const Int& multiplicity, int sign,
                             const std::string& name,
                             const CheckPolicy& policy = {});
CalculusState remove_torus_component(const CalculusState& s,
                                     const std::string& component, const Int& n,
                                     const CheckPolicy& policy = {});

// Runs a whole script; a MoveError names the 1-based statement it came from.
CalculusState run_script(const CalculusState& s, const std::vector<Move>& script,
                         const CheckPolicy& policy = {});

}  // namespace kirby
