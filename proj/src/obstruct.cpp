#include "kirbyspin/obstruct.hpp"

#include <cstdlib>

#include "kirbyspin/error.hpp"
#include "kirbyspin/lens.hpp"
#include "kirbyspin/link_json.hpp"
#include "kirbyspin/moves.hpp"
#include "kirbyspin/script.hpp"
#include "kirbyspin/sha256.hpp"
#include "kirbyspin/spin.hpp"

namespace kirby {

GluedInvariants glue_to_trace(const FillingInvariants& filling, int trace_sigma) {
  if (trace_sigma < -1 || trace_sigma > 1)
    throw Error("trace signature must be -1, 0, or +1");
  return {filling.b2 + 1, filling.sigma - trace_sigma};
}

bool furuta_violated(const GluedInvariants& g) {
  if (g.b2 == 0) throw Error("10/8 bound needs b2 != 0");
  if (!is_indefinite(g)) throw Error("10/8 bound needs an indefinite form");
  long long a = std::llabs(g.sigma);
  return 4 * g.b2 < 5 * a + 8;
}

CableDecomposition cable_decomposition(const Int& s, const Int& t) {
  if (t < 1) throw Error("cable parameter t must be >= 1");
  if (sgn(s) == 0) throw Error("surgery numerator s must be nonzero");
  Int g;
  mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
  if (g != 1) throw Error("s and t must be coprime");
  CableDecomposition out;
  out.surgery = s * t;
  out.lens_t = t;
  out.lens_s = s;
  out.trace_sigma = sgn(s);
  return out;
}

std::string verdict_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed:
      return "obstructed";
    case Verdict::NotObstructed:
      return "not_obstructed";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

nlohmann::ordered_json ObstructionCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["inputs"] = {{"p", int_json(p)}, {"q", int_json(q)}, {"n", int_json(n)}};
  nlohmann::ordered_json sv = nlohmann::ordered_json::array();
  for (const Int& s : s_values) sv.push_back(int_json(s));
  j["s"] = std::move(sv);
  nlohmann::ordered_json fj = nlohmann::ordered_json::array();
  for (const auto& f : fillings)
    fj.push_back({{"char", f.sublink},
                  {"b2", f.b2},
                  {"sigma", f.sigma},
                  {"script_sha", f.script_sha}});
  j["fillings"] = std::move(fj);
  j["lens_bound"] = int_json(lens_bound);
  j["trace_sigmas"] = trace_sigmas;
  nlohmann::ordered_json gj = nlohmann::ordered_json::array();
  for (const auto& g : glued)
    gj.push_back({{"filling", g.filling},
                  {"s", int_json(g.s)},
                  {"b2", g.glued.b2},
                  {"sigma", g.glued.sigma},
                  {"lhs", int_json(g.lhs)},
                  {"rhs", int_json(g.rhs)},
                  {"applicable", g.applicable},
                  {"violated", g.violated}});
  j["glued"] = std::move(gj);
  j["verdict"] = verdict_string(verdict);
  if (!note.empty()) j["note"] = note;
  return j;
}

namespace {

// Worst case over an unknown lens summand of rank at most `bound` glued in
// alongside the trace: maximal b2, |sigma| pushed as low as the triangle
// inequality allows.
GluedBranch worst_case_branch(const std::string& filling,
                              const FillingInvariants& w, const Int& s,
                              int trace_sigma, const Int& bound) {
  GluedBranch br;
  br.filling = filling;
  br.s = s;
  if (!bound.fits_slong_p())
    throw Error("lens bound " + bound.get_str() + " out of range");
  long long bd = bound.get_si();
  GluedInvariants base = glue_to_trace(w, trace_sigma);
  br.glued.b2 = base.b2 + bd;
  long long drop = std::llabs(base.sigma) - bd;
  long long amag = drop > 0 ? drop : 0;
  br.glued.sigma = base.sigma >= 0 ? amag : -amag;
  br.lhs = 4 * to_int(br.glued.b2);
  br.rhs = 5 * to_int(amag) + 8;
  br.applicable = is_indefinite(br.glued);
  br.violated = br.applicable && br.lhs < br.rhs;
  return br;
}

Verdict settle(const std::vector<GluedBranch>& glued) {
  bool all_violated = true, any_inapplicable = false;
  for (const auto& g : glued) {
    if (!g.applicable) any_inapplicable = true;
    if (!(g.applicable && g.violated)) all_violated = false;
  }
  if (glued.empty()) return Verdict::NotObstructed;
  if (all_violated) return Verdict::Obstructed;
  if (any_inapplicable) return Verdict::Inconclusive;
  return Verdict::NotObstructed;
}

}  // namespace

ObstructionCertificate obstruct_knot_surgery(const Int& p, const Int& q,
                                             const Int& n) {
  if (!is_odd(p) || !is_odd(q))
    throw Error("framings p = " + p.get_str() + ", q = " + q.get_str() +
                " must both be odd");
  if (!is_odd(n) || n < 1)
    throw Error("n = " + n.get_str() + " must be odd and >= 1");

  ObstructionCertificate cert;
  cert.p = p;
  cert.q = q;
  cert.n = n;
  Int s0 = p * q - 1;
  cert.lens_bound = abs_int(s0);
  if (sgn(s0) == 0) {
    cert.s_values = {0};
    cert.trace_sigmas = {0};
  } else {
    cert.s_values = {cert.lens_bound, -cert.lens_bound};
    cert.trace_sigmas = {1, -1};
  }

  const FramedLink start = l_n_trace(p, q);
  long long sigma0 = signature(start);

  struct Branch {
    std::string name;
    Int framing;
  };
  const Branch branches[2] = {{"K1", p}, {"K2", q}};

  for (const Branch& b : branches) {
    if (!(n >= 3) || !(n * n > b.framing + 1)) {
      cert.verdict = Verdict::NotObstructed;
      cert.note = "removal script infeasible for " + b.name + ": need odd n >= 3 with n^2 > " +
                  b.framing.get_str() + " + 1, got n = " + n.get_str();
      return cert;
    }
  }

  for (const Branch& b : branches) {
    CalculusState st(start, sublink_of_names(start, {b.name}));
    Int expect_b2 = n * n - b.framing + 1;
    Int expect_sigma = to_int(sigma0) + n * n - b.framing - 1;
    std::vector<Move> script = {
        RemoveTorus{b.name, n},
        AssertStmt{AssertStmt::Kind::CharSet, 0, {}},
        AssertStmt{AssertStmt::Kind::B2, expect_b2, {}},
        AssertStmt{AssertStmt::Kind::Sigma, expect_sigma, {}},
    };
    CalculusState fin = run_script(st, script);
    FillingCertificate fc;
    fc.sublink = b.name;
    fc.b2 = fin.b2();
    fc.sigma = fin.sigma();
    fc.script_sha = sha256_hex(print_script(fin.history()));
    cert.fillings.push_back(std::move(fc));
  }

  if (sgn(s0) == 0) {
    // Integral description: the two spin structures must produce the same
    // filling, glued against a signature-0 trace with no lens summand.
    const auto& a = cert.fillings[0];
    const auto& bb = cert.fillings[1];
    if (a.b2 != bb.b2 || a.sigma != bb.sigma)
      throw Error("internal: the two spin fillings disagree in the integral case");
    for (const auto& f : cert.fillings)
      cert.glued.push_back(
          worst_case_branch(f.sublink, {f.b2, f.sigma}, 0, 0, 0));
  } else {
    for (const auto& f : cert.fillings)
      for (const Int& s : cert.s_values)
        cert.glued.push_back(worst_case_branch(f.sublink, {f.b2, f.sigma}, s,
                                               sgn(s), cert.lens_bound));
  }

  cert.verdict = settle(cert.glued);
  return cert;
}

std::optional<Int> min_odd_n(const Int& p, const Int& q, const Int& cap) {
  for (Int n = 1; n <= cap; n += 2) {
    ObstructionCertificate c = obstruct_knot_surgery(p, q, n);
    if (c.verdict == Verdict::Obstructed) {
      ObstructionCertificate probe = obstruct_knot_surgery(p, q, n + 2);
      if (probe.verdict != Verdict::Obstructed)
        throw Error("monotonicity failed: obstructed at n = " + n.get_str() +
                    " but not at n = " + Int(n + 2).get_str());
      return n;
    }
  }
  return std::nullopt;
}

}  // namespace kirby
