#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kirbyspin/framed_link.hpp"

namespace kirby {

// Invariants of the closed manifold obtained by capping a filling of a
// surgered sphere with the (reversed) surgery trace.
struct GluedInvariants {
  long long b2 = 0;
  long long sigma = 0;
  bool operator==(const GluedInvariants&) const = default;
};

// The trace of a single knot surgery carries one 2-handle, so b2 grows by
// one and the trace's signature (the sign of the surgery coefficient, or 0)
// is subtracted.
GluedInvariants glue_to_trace(const FillingInvariants& filling, int trace_sigma);

inline bool is_indefinite(const GluedInvariants& g) {
  long long a = g.sigma < 0 ? -g.sigma : g.sigma;
  return g.b2 > 0 && a < g.b2;
}

// Strict 10/8 violation: 4 b2 < 5 |sigma| + 8.  Only meaningful for a closed
// spin manifold with nonzero, indefinite intersection form; throws when the
// hypotheses fail instead of guessing.
bool furuta_violated(const GluedInvariants& g);

// Rolling a t-strand cable: s/t-surgery on a knot equals integral st-surgery
// on the (t,s)-cable up to an L(t,s) lens summand.
struct CableDecomposition {
  Int surgery;  // s * t: the integral coefficient on the cable
  Int lens_t, lens_s;
  int trace_sigma = 0;  // sign of s/t = sign of s (t >= 1)
  bool operator==(const CableDecomposition&) const = default;
};

CableDecomposition cable_decomposition(const Int& s, const Int& t);

struct FillingCertificate {
  std::string sublink;  // the component the removal consumed: "K1" or "K2"
  long long b2 = 0;
  long long sigma = 0;
  std::string script_sha;  // SHA-256 of the printed elementary-move script
};

// One worst-case Furuta test: a filling, a signed surgery numerator, the
// adversarial glued invariants, and the two sides of the inequality.
struct GluedBranch {
  std::string filling;
  Int s;
  GluedInvariants glued;
  Int lhs, rhs;  // 4 b2  vs  5 |sigma| + 8
  bool applicable = false;
  bool violated = false;
};

enum class Verdict { Obstructed, NotObstructed, Inconclusive };
std::string verdict_string(Verdict v);

struct ObstructionCertificate {
  Int p, q, n;
  std::vector<Int> s_values;  // candidate surgery numerators +-(pq-1), or {0}
  Int lens_bound = 0;         // uniform bound |s| on any lens summand's rank
  std::vector<int> trace_sigmas;
  std::vector<FillingCertificate> fillings;
  std::vector<GluedBranch> glued;
  Verdict verdict = Verdict::Inconclusive;
  std::string note;

  nlohmann::ordered_json to_json() const;
};

// Decides whether the boundary of the (p,1)(q,1)-chain trace, after the
// odd-n torus-component removal, certifies that no description as surgery on
// a knot with numerator +-(pq-1) exists.  "obstructed" requires a strict
// violation on every branch: both spin fillings, every surgery sign, and the
// worst lens summand the bound allows.
ObstructionCertificate obstruct_knot_surgery(const Int& p, const Int& q, const Int& n);

// Smallest odd n whose certificate says "obstructed", scanning n = 1, 3, ...
// up to cap inclusive; checks n+2 stays obstructed before trusting a hit.
std::optional<Int> min_odd_n(const Int& p, const Int& q, const Int& cap);

}  // namespace kirby
