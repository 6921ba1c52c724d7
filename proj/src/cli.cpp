#include "kirbyspin/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "kirbyspin/error.hpp"
#include "kirbyspin/homology.hpp"
#include "kirbyspin/lens.hpp"
#include "kirbyspin/link_json.hpp"
#include "kirbyspin/moves.hpp"
#include "kirbyspin/obstruct.hpp"
#include "kirbyspin/script.hpp"
#include "kirbyspin/sha256.hpp"
#include "kirbyspin/spin.hpp"

namespace kirby {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Every command writes one JSON document: to --emit FILE when given,
// standard output otherwise.
void deliver(const nlohmann::ordered_json& j, const std::string& emit,
             std::ostream& out) {
  if (emit.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(emit, std::ios::binary);
  if (!f) throw Error("cannot write '" + emit + "'");
  f << j.dump(2) << "\n";
}

unsigned long enum_cap_from_env() {
  const char* v = std::getenv("KIRBY_SPIN_MAX_ENUM");
  if (!v || !*v) return kDefaultEnumCap;
  char* end = nullptr;
  unsigned long cap = std::strtoul(v, &end, 10);
  if (!end || *end != '\0')
    throw Error("KIRBY_SPIN_MAX_ENUM must be a nonnegative integer, got '" +
                std::string(v) + "'");
  return cap;
}

nlohmann::ordered_json tally_json(const MoveTally& t) {
  return {{"up_plus", t.up_pos},
          {"up_minus", t.up_neg},
          {"down_plus", t.down_pos},
          {"down_minus", t.down_neg}};
}

MoveTally parse_tally(const nlohmann::json& j) {
  MoveTally t;
  if (!j.is_object()) throw ParseError("tally: expected an object");
  auto get = [&](const char* k) -> long long {
    if (!j.contains(k) || !j[k].is_number_integer())
      throw ParseError(std::string("tally: missing integer field '") + k + "'");
    return j[k].get<long long>();
  };
  t.up_pos = get("up_plus");
  t.up_neg = get("up_minus");
  t.down_pos = get("down_plus");
  t.down_neg = get("down_minus");
  return t;
}

nlohmann::ordered_json state_json(const CalculusState& st) {
  nlohmann::ordered_json j;
  j["link"] = framed_link_json(st.link());
  j["char"] = sublink_names(st.link(), st.char_sublink());
  j["tally"] = tally_json(st.tally());
  nlohmann::ordered_json hist = nlohmann::ordered_json::array();
  for (const Move& m : st.history()) hist.push_back(print_move(m));
  j["history"] = std::move(hist);
  return j;
}

CalculusState parse_state(const nlohmann::json& j) {
  FramedLink link = parse_framed_link(j.at("link"));
  std::vector<std::string> chr;
  if (j.contains("char")) {
    if (!j["char"].is_array()) throw ParseError("char: expected an array of names");
    for (const auto& e : j["char"]) {
      if (!e.is_string()) throw ParseError("char: expected component names");
      chr.push_back(e.get<std::string>());
    }
  }
  MoveTally tally;
  if (j.contains("tally")) tally = parse_tally(j["tally"]);
  std::vector<Move> history;
  if (j.contains("history")) {
    if (!j["history"].is_array())
      throw ParseError("history: expected an array of statements");
    std::string text;
    for (const auto& e : j["history"]) {
      if (!e.is_string()) throw ParseError("history: expected statement strings");
      text += e.get<std::string>();
      text += '\n';
    }
    history = parse_script(text);
  }
  return CalculusState(std::move(link), sublink_of_names(link, chr), tally,
                       std::move(history));
}

int cmd_snf(const std::string& file, const std::string& emit, std::ostream& out) {
  FramedLink l = parse_framed_link(parse_json_text(slurp(file), file));
  HomologyProfile h = smith_normal_form(l);
  nlohmann::ordered_json j;
  nlohmann::ordered_json f = nlohmann::ordered_json::array();
  for (const Int& d : h.invariant_factors) f.push_back(int_json(d));
  j["invariant_factors"] = std::move(f);
  j["b1"] = h.b1;
  j["order"] = int_json(h.order);
  deliver(j, emit, out);
  return 0;
}

int cmd_char_sublinks(const std::string& file, const std::string& emit,
                      std::ostream& out) {
  FramedLink l = parse_framed_link(parse_json_text(slurp(file), file));
  CharSublinkSet set = characteristic_sublinks(l, enum_cap_from_env());
  nlohmann::ordered_json j;
  j["names"] = l.names;
  j["count"] = int_json(set.count);
  j["enumerated"] = set.enumerated;
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (const CharSublink& c : set.sublinks) {
    nlohmann::ordered_json e;
    nlohmann::ordered_json bits = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < l.components(); ++i)
      bits.push_back(c.contains(i) ? 1 : 0);
    e["bits"] = std::move(bits);
    e["members"] = sublink_names(l, c);
    subs.push_back(std::move(e));
  }
  j["sublinks"] = std::move(subs);
  deliver(j, emit, out);
  return 0;
}

int cmd_even_chain(long long t, long long s, const std::string& emit,
                   std::ostream& out) {
  EvenChain chain = even_chain(to_int(t), to_int(s));
  FramedLink l = chain_link(chain);
  FillingInvariants v = lens_filling_invariants(to_int(t), to_int(s));
  nlohmann::ordered_json j;
  j["t"] = int_json(chain.t);
  j["s"] = int_json(chain.s);
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const Int& c : chain.coefficients) cs.push_back(int_json(c));
  j["coefficients"] = std::move(cs);
  j["b2"] = v.b2;
  j["sigma"] = v.sigma;
  // The continued fraction re-evaluated and reduced: documents the exact
  // identity the chain was checked against.
  Rat val(chain.t, chain.s);
  val.canonicalize();
  j["value"] = val.get_str();
  j["determinant"] = int_json(determinant(l));
  deliver(j, emit, out);
  return 0;
}

int cmd_run(const std::string& link_file, const std::vector<std::string>& chr,
            const std::string& script_file, const std::string& emit,
            const std::string& emit_state, std::ostream& out) {
  nlohmann::json input = parse_json_text(slurp(link_file), link_file);
  std::optional<CalculusState> st;
  if (input.is_object() && input.contains("link")) {
    if (!chr.empty())
      throw Error("--char conflicts with a state-file input (it already "
                  "carries its sublink)");
    st.emplace(parse_state(input));
  } else {
    FramedLink l = parse_framed_link(input);
    st.emplace(l, sublink_of_names(l, chr));
  }

  std::vector<Move> script = parse_script(slurp(script_file));
  CalculusState fin = run_script(*st, script);

  nlohmann::ordered_json summary;
  summary["components"] = fin.link().names;
  summary["char"] = sublink_names(fin.link(), fin.char_sublink());
  summary["b2"] = fin.b2();
  summary["sigma"] = fin.sigma();
  summary["tally"] = tally_json(fin.tally());
  summary["script_sha"] = sha256_hex(print_script(fin.history()));
  deliver(summary, emit, out);
  if (!emit_state.empty()) {
    std::ofstream f(emit_state, std::ios::binary);
    if (!f) throw Error("cannot write '" + emit_state + "'");
    f << state_json(fin).dump(2) << "\n";
  }
  return 0;
}

int cmd_obstruct(long long p, long long q, long long n, const std::string& emit,
                 std::ostream& out) {
  ObstructionCertificate cert = obstruct_knot_surgery(to_int(p), to_int(q), to_int(n));
  deliver(cert.to_json(), emit, out);
  return cert.verdict == Verdict::Obstructed ? 0 : 1;
}

int cmd_min_n(long long p, long long q, long long cap, const std::string& emit,
              std::ostream& out) {
  std::optional<Int> m = min_odd_n(to_int(p), to_int(q), to_int(cap));
  nlohmann::ordered_json j;
  j["p"] = p;
  j["q"] = q;
  j["cap"] = cap;
  if (m) {
    j["min_n"] = int_json(*m);
  } else {
    j["min_n"] = nullptr;
    j["note"] = "none below cap";
  }
  deliver(j, emit, out);
  return m ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact characteristic-sublink calculus and 10/8 obstruction "
               "certificates for surgery diagrams"};
  app.require_subcommand(1);

  std::string emit;
  struct {
    std::string link, script, emit_state;
    std::vector<std::string> chr;
    long long p = 0, q = 0, n = 0, t = 0, s = 0, cap = 0;
  } a;

  auto* snf = app.add_subcommand("snf", "Smith normal form of a link's matrix");
  snf->add_option("link", a.link, "framed-link JSON file")->required();
  snf->add_option("--emit", emit, "write JSON here instead of stdout");

  auto* cs = app.add_subcommand("char-sublinks",
                                "enumerate characteristic sublinks");
  cs->add_option("link", a.link, "framed-link JSON file")->required();
  cs->add_option("--emit", emit, "write JSON here instead of stdout");

  auto* ec = app.add_subcommand("even-chain",
                                "even continued-fraction chain for t/s");
  ec->add_option("T", a.t, "numerator")->required();
  ec->add_option("S", a.s, "even denominator")->required();
  ec->add_option("--emit", emit, "write JSON here instead of stdout");

  auto* run = app.add_subcommand("run", "run a move script against a diagram");
  run->add_option("link", a.link, "framed-link or emitted-state JSON file")
      ->required();
  run->add_option("--char", a.chr, "characteristic sublink component (repeat)");
  run->add_option("--script", a.script, "move script file")->required();
  run->add_option("--emit", emit, "write the summary JSON here");
  run->add_option("--emit-state", a.emit_state, "write the full final state here");

  auto* ob = app.add_subcommand("obstruct",
                                "knot-surgery obstruction certificate");
  ob->add_option("P", a.p, "first odd framing")->required();
  ob->add_option("Q", a.q, "second odd framing")->required();
  ob->add_option("N", a.n, "odd removal parameter")->required();
  ob->add_option("--emit", emit, "write the certificate here");

  auto* mn = app.add_subcommand("min-n", "least obstructed odd n up to a cap");
  mn->add_option("P", a.p, "first odd framing")->required();
  mn->add_option("Q", a.q, "second odd framing")->required();
  mn->add_option("--cap", a.cap, "largest n to try")->required();
  mn->add_option("--emit", emit, "write the result here");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("kirby-spin");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*snf) return cmd_snf(a.link, emit, out);
    if (*cs) return cmd_char_sublinks(a.link, emit, out);
    if (*ec) return cmd_even_chain(a.t, a.s, emit, out);
    if (*run) return cmd_run(a.link, a.chr, a.script, emit, a.emit_state, out);
    if (*ob) return cmd_obstruct(a.p, a.q, a.n, emit, out);
    if (*mn) return cmd_min_n(a.p, a.q, a.cap, emit, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "no command\n";
  return 2;
}

}  // namespace kirby
