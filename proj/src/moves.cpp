#include "kirbyspin/moves.hpp"

#include <string>

#include "kirbyspin/error.hpp"
#include "kirbyspin/homology.hpp"
#include "kirbyspin/script.hpp"

namespace kirby {

namespace {

// Exact count of characteristic sublinks without enumerating them.
Int char_count(const FramedLink& l) { return characteristic_sublinks(l, 0).count; }

std::string int_str(const Int& v) { return v.get_str(); }

}  // namespace

CalculusState::CalculusState(FramedLink link, CharSublink chr)
    : link_(std::move(link)), char_(std::move(chr)) {
  link_.validate();
  if (char_.bits.size() != link_.components())
    throw Error("characteristic sublink indexes " +
                std::to_string(char_.bits.size()) + " components, link has " +
                std::to_string(link_.components()));
  if (!is_characteristic(link_, char_))
    throw Error("sublink {" + [&] {
      std::string s;
      for (const auto& n : sublink_names(link_, char_)) {
        if (!s.empty()) s += ",";
        s += n;
      }
      return s;
    }() + "} is not characteristic for this linking matrix");
}

CalculusState::CalculusState(FramedLink link, CharSublink chr, MoveTally tally,
                             std::vector<Move> history)
    : CalculusState(std::move(link), std::move(chr)) {
  tally_ = tally;
  history_ = std::move(history);
}

long long CalculusState::sigma() const {
  if (!sigma_cache_) sigma_cache_ = signature(link_);
  return *sigma_cache_;
}

// Applies statements to a private copy of the state, checking move legality
// and the characteristic condition after every step and the conserved
// surgery invariants per the policy.
class MoveEngine {
 public:
  MoveEngine(CalculusState st, CheckPolicy pol)
      : st_(std::move(st)),
        pol_(pol),
        fp0_(boundary_fingerprint(st_.link_)),
        char_count0_(char_count(st_.link_)),
        sigma0_(st_.sigma()),
        tally0_(st_.tally_) {}

  void run(const std::vector<Move>& script) {
    for (std::size_t i = 0; i < script.size(); ++i) {
      try {
        apply(script[i]);
      } catch (const MoveError& e) {
        throw MoveError("statement " + std::to_string(i + 1) + " (" +
                        print_move(script[i]) + "): " + e.what());
      }
    }
  }

  CalculusState finish() {
    verify_conserved("script end");
    return std::move(st_);
  }

 private:
  CalculusState st_;
  CheckPolicy pol_;
  HomologyProfile fp0_;
  Int char_count0_;
  long long sigma0_;
  MoveTally tally0_;
  std::size_t fresh_counter_ = 0;

  std::size_t need_index(const std::string& name) const {
    auto idx = st_.link_.index_of(name);
    if (!idx) throw MoveError("unknown component '" + name + "'");
    return *idx;
  }

  static void need_sign(int sign) {
    if (sign != 1 && sign != -1) throw MoveError("sign must be +1 or -1");
  }

  std::string fresh_name() {
    for (;; ++fresh_counter_) {
      std::string nm = "e" + std::to_string(fresh_counter_);
      if (!st_.link_.index_of(nm)) {
        ++fresh_counter_;
        return nm;
      }
    }
  }

  void apply(const Move& m) {
    std::visit([&](const auto& mv) { apply_one(mv); }, m);
  }

  void touched() { st_.sigma_cache_.reset(); }

  void apply_one(const BlowUp& m) {
    need_sign(m.sign);
    if (m.name.empty()) throw MoveError("new component needs a name");
    if (st_.link_.index_of(m.name))
      throw MoveError("component '" + m.name + "' already exists");
    st_.link_.names.push_back(m.name);
    st_.link_.q = st_.link_.q.extended(m.sign);
    // A split +-1-framed unknot has odd self-framing, so the characteristic
    // condition forces the new curve into the sublink.
    st_.char_.bits.push_back(true);
    (m.sign > 0 ? st_.tally_.up_pos : st_.tally_.up_neg) += 1;
    st_.history_.push_back(m);
    touched();
    post_move();
  }

  void apply_one(const BlowDown& m) {
    std::size_t i = need_index(m.name);
    if (!st_.link_.q.row_split(i))
      throw MoveError("component '" + m.name + "' still links others");
    const Int& f = st_.link_.q.at(i, i);
    if (f != 1 && f != -1)
      throw MoveError("component '" + m.name + "' has framing " + int_str(f) +
                      ", need +1 or -1");
    if (!st_.char_.contains(i))
      throw MoveError("component '" + m.name +
                      "' lies outside the characteristic sublink");
    (sgn(f) > 0 ? st_.tally_.down_pos : st_.tally_.down_neg) += 1;
    st_.link_.names.erase(st_.link_.names.begin() + static_cast<std::ptrdiff_t>(i));
    st_.link_.q = st_.link_.q.removed(i);
    st_.char_.bits.erase(i);
    st_.history_.push_back(m);
    touched();
    post_move();
  }

  void apply_one(const Slide& m) {
    need_sign(m.sign);
    std::size_t i = need_index(m.moving);
    std::size_t j = need_index(m.over);
    if (i == j) throw MoveError("cannot slide '" + m.moving + "' over itself");
    slide_raw(i, m.sign, j);
    st_.history_.push_back(m);
    touched();
    post_move();
  }

  // row/col i += sign * row/col j on the linking matrix, and the sublink
  // indicator transforms contravariantly: x_j ^= x_i.
  void slide_raw(std::size_t i, int sign, std::size_t j) {
    SymMatrix& q = st_.link_.q;
    const std::size_t n = q.dim();
    Int new_diag = q.at(i, i) + 2 * sign * q.at(i, j) + q.at(j, j);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      q.set(i, k, q.at(i, k) + sign * q.at(j, k));
    }
    q.set(i, i, new_diag);
    if (st_.char_.contains(i)) st_.char_.bits.flip(j);
  }

  void apply_one(const BlowUpAcross& m) {
    need_sign(m.sign);
    std::size_t t = need_index(m.target);
    if (st_.link_.index_of(m.name))
      throw MoveError("component '" + m.name + "' already exists");
    if (sgn(m.multiplicity) == 0) throw MoveError("multiplicity must be nonzero");
    // The new curve starts inside the sublink (odd framing) and each slide
    // toggles it by the target's membership; it can only exit when the
    // multiplicity is odd and the target is characteristic.
    if (!is_odd(m.multiplicity) || !st_.char_.contains(t))
      throw MoveError(
          "blowup-across leaves '" + m.name +
          "' inside the characteristic sublink (need odd multiplicity and a "
          "characteristic target); multiplicity " +
          int_str(m.multiplicity) + ", target " +
          (st_.char_.contains(t) ? "characteristic" : "not characteristic"));

    apply_one(BlowUp{m.sign, m.name});
    int step = sgn(m.multiplicity) > 0 ? 1 : -1;
    Int k = abs_int(m.multiplicity);
    for (Int r = 0; r < k; ++r) apply_one(Slide{m.target, step, m.name});

    std::size_t e = *st_.link_.index_of(m.name);
    if (st_.char_.contains(e))
      throw MoveError("internal: new curve failed to leave the sublink");
  }

  void apply_one(const RemoveTorus& m) {
    std::size_t t = need_index(m.target);
    if (!is_odd(m.n) || m.n < 3)
      throw MoveError("parameter n must be odd and >= 3, got " + int_str(m.n));
    Int f = st_.link_.q.at(t, t);
    if (!is_odd(f))
      throw MoveError("target framing " + int_str(f) + " must be odd");
    if (!(m.n * m.n > f + 1))
      throw MoveError("n = " + int_str(m.n) + " too small: framing " +
                      int_str(f) + " cannot reach -1 (need n^2 > framing + 1)");
    if (!st_.char_.contains(t))
      throw MoveError("target '" + m.target +
                      "' must lie in the characteristic sublink");
    Int climb = m.n * m.n - f - 1;
    if (!climb.fits_ulong_p() || climb.get_ui() > 1000000ul)
      throw MoveError("expansion would create " + int_str(climb) +
                      " components; refusing");

    apply_one(BlowUpAcross{m.target, m.n, -1, fresh_name()});
    const unsigned long steps = climb.get_ui();
    for (unsigned long r = 0; r < steps; ++r) {
      std::string nm = fresh_name();
      apply_one(BlowUp{+1, nm});
      apply_one(Slide{m.target, +1, nm});
    }

    // Framing is now -1; strip the remaining geometric linking by sliding
    // each neighbour over the target until the off-diagonal dies.  Sliding c
    // over t only rewrites row c, so one lexicographic pass suffices.
    t = *st_.link_.index_of(m.target);
    std::vector<std::string> neighbours;
    for (std::size_t c = 0; c < st_.link_.components(); ++c)
      if (c != t && sgn(st_.link_.q.at(t, c)) != 0)
        neighbours.push_back(st_.link_.names[c]);
    std::sort(neighbours.begin(), neighbours.end());
    for (const auto& nb : neighbours) {
      std::size_t c = need_index(nb);
      while (sgn(st_.link_.q.at(c, t)) != 0) {
        int s = sgn(st_.link_.q.at(c, t)) > 0 ? 1 : -1;
        apply_one(Slide{nb, s, m.target});
      }
    }
    if (!st_.link_.q.row_split(t))
      throw MoveError("internal: target still linked after unlinking pass");
    apply_one(BlowDown{m.target});
  }

  void apply_one(const AssertStmt& m) {
    switch (m.kind) {
      case AssertStmt::Kind::Characteristic:
        if (!is_characteristic(st_.link_, st_.char_))
          throw MoveError("assertion failed: sublink is not characteristic");
        break;
      case AssertStmt::Kind::B2:
        if (Int(static_cast<long>(st_.b2())) != m.value)
          throw MoveError("assertion failed: b2 is " + std::to_string(st_.b2()) +
                          ", expected " + int_str(m.value));
        break;
      case AssertStmt::Kind::Sigma:
        if (Int(static_cast<long>(st_.sigma())) != m.value)
          throw MoveError("assertion failed: sigma is " +
                          std::to_string(st_.sigma()) + ", expected " +
                          int_str(m.value));
        break;
      case AssertStmt::Kind::EmptyChar:
        if (!empty_is_characteristic(st_.link_))
          throw MoveError(
              "assertion failed: the empty sublink is not characteristic "
              "(some framing is odd)");
        break;
      case AssertStmt::Kind::CharSet: {
        CharSublink want = sublink_of_names(st_.link_, m.names);
        if (!(want == st_.char_)) {
          std::string have;
          for (const auto& n : sublink_names(st_.link_, st_.char_)) {
            if (!have.empty()) have += ",";
            have += n;
          }
          throw MoveError("assertion failed: characteristic sublink is {" + have +
                          "}");
        }
        break;
      }
    }
    st_.history_.push_back(m);
  }

  long long expected_sigma() const {
    return sigma0_ + (st_.tally_.up_pos - tally0_.up_pos) -
           (st_.tally_.up_neg - tally0_.up_neg) -
           (st_.tally_.down_pos - tally0_.down_pos) +
           (st_.tally_.down_neg - tally0_.down_neg);
  }

  // O(n * |sublink|) residual check of Q x = diag(Q) mod 2; cheap enough to
  // run after every elementary move.
  void check_characteristic() const {
    const SymMatrix& q = st_.link_.q;
    const std::size_t n = q.dim();
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < n; ++j)
      if (st_.char_.contains(j)) members.push_back(j);
    for (std::size_t i = 0; i < n; ++i) {
      bool acc = false;
      for (std::size_t j : members)
        if (is_odd(q.at(i, j))) acc = !acc;
      if (acc != is_odd(q.at(i, i)))
        throw MoveError("internal: characteristic condition broken at '" +
                        st_.link_.names[i] + "'");
    }
  }

  void post_move() {
    check_characteristic();
    bool deep = pol_.conservation == CheckPolicy::Conservation::EveryMove ||
                (pol_.conservation == CheckPolicy::Conservation::Auto &&
                 st_.link_.components() <= pol_.small_dim);
    if (deep) verify_conserved("move");
  }

  void verify_conserved(const char* when) const {
    // The fingerprint's order field doubles as the |det| invariant, so one
    // Smith reduction covers both conserved quantities.
    HomologyProfile fp = boundary_fingerprint(st_.link_);
    if (!(fp == fp0_))
      throw MoveError(std::string(when) +
                      ": first-homology fingerprint (invariant factors, b1, "
                      "|det|) changed");
    Int cc = char_count(st_.link_);
    if (cc != char_count0_)
      throw MoveError(std::string(when) + ": characteristic-sublink count " +
                      "drifted from " + int_str(char_count0_) + " to " +
                      int_str(cc));
    long long s = st_.sigma();
    if (s != expected_sigma())
      throw MoveError(std::string(when) + ": signature " + std::to_string(s) +
                      " disagrees with the blow-up tally prediction " +
                      std::to_string(expected_sigma()));
  }
};

namespace {

CalculusState run_one(const CalculusState& s, Move m, const CheckPolicy& policy) {
  return run_script(s, {std::move(m)}, policy);
}

}  // namespace

CalculusState blow_up(const CalculusState& s, int sign, const std::string& name,
                      const CheckPolicy& policy) {
  return run_one(s, BlowUp{sign, name}, policy);
}

CalculusState blow_down(const CalculusState& s, const std::string& name,
                        const CheckPolicy& policy) {
  return run_one(s, BlowDown{name}, policy);
}

CalculusState slide(const CalculusState& s, const std::string& moving, int sign,
                    const std::string& over, const CheckPolicy& policy) {
  return run_one(s, Slide{moving, sign, over}, policy);
}

CalculusState blow_up_across(const CalculusState& s, const std::string& target,
                             const Int& multiplicity, int sign,
                             const std::string& name, const CheckPolicy& policy) {
  return run_one(s, BlowUpAcross{target, multiplicity, sign, name}, policy);
}

CalculusState remove_torus_component(const CalculusState& s,
                                     const std::string& component, const Int& n,
                                     const CheckPolicy& policy) {
  return run_one(s, RemoveTorus{component, n}, policy);
}

CalculusState run_script(const CalculusState& s, const std::vector<Move>& script,
                         const CheckPolicy& policy) {
  MoveEngine eng(s, policy);
  eng.run(script);
  return eng.finish();
}

}  // namespace kirby
