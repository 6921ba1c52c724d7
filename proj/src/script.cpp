#include "kirbyspin/script.hpp"

#include <cctype>
#include <sstream>

#include "kirbyspin/error.hpp"

namespace kirby {

namespace {

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool is_int(const std::string& s) {
  std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (k >= s.size()) return false;
  for (std::size_t i = k; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

struct LineParser {
  std::size_t line_no;
  std::vector<std::string> tok;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
  }

  bool done() const { return pos >= tok.size(); }

  const std::string& next(const std::string& what) {
    if (done()) fail("expected " + what);
    return tok[pos++];
  }

  std::string ident(const std::string& what) {
    const std::string& t = next(what);
    if (!is_ident(t)) fail("'" + t + "' is not a valid " + what);
    return t;
  }

  Int integer(const std::string& what) {
    const std::string& t = next(what);
    if (!is_int(t)) fail("'" + t + "' is not an integer (" + what + ")");
    return Int(t[0] == '+' ? t.substr(1) : t);
  }

  int unit_sign() {
    const std::string& t = next("+1 or -1");
    if (t == "+1" || t == "1") return 1;
    if (t == "-1") return -1;
    fail("'" + t + "' is not +1 or -1");
  }

  void keyword(const std::string& kw) {
    const std::string& t = next("'" + kw + "'");
    if (t != kw) fail("expected '" + kw + "', got '" + t + "'");
  }

  void end() {
    if (!done()) fail("unexpected trailing '" + tok[pos] + "'");
  }

  // Remaining tokens glued back together: the {A,B} set syntax may have
  // been split at spaces.
  std::string rest() {
    std::string s;
    while (!done()) s += tok[pos++];
    return s;
  }
};

std::vector<std::string> parse_name_set(LineParser& p) {
  std::string s = p.rest();
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    p.fail("expected a component set like {K1,K2} or {}");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> names;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !names.empty()) names.push_back(cur);
  for (const auto& n : names)
    if (!is_ident(n)) p.fail("'" + n + "' is not a valid component name");
  return names;
}

Move parse_statement(LineParser& p) {
  const std::string& head = p.next("a statement");
  if (head == "blowup") {
    int sign = p.unit_sign();
    p.keyword("as");
    std::string name = p.ident("component name");
    p.end();
    return BlowUp{sign, std::move(name)};
  }
  if (head == "blowdown") {
    std::string name = p.ident("component name");
    p.end();
    return BlowDown{std::move(name)};
  }
  if (head == "slide") {
    std::string moving = p.ident("component name");
    const std::string& st = p.next("+ or -");
    int sign;
    if (st == "+")
      sign = 1;
    else if (st == "-")
      sign = -1;
    else
      p.fail("'" + st + "' is not + or -");
    std::string over = p.ident("component name");
    p.end();
    return Slide{std::move(moving), sign, std::move(over)};
  }
  if (head == "macro") {
    const std::string& which = p.next("macro name");
    if (which == "blowup-across") {
      std::string target = p.ident("component name");
      p.keyword("x");
      Int mult = p.integer("multiplicity");
      int sign = p.unit_sign();
      p.keyword("as");
      std::string name = p.ident("component name");
      p.end();
      return BlowUpAcross{std::move(target), std::move(mult), sign, std::move(name)};
    }
    if (which == "remove-torus") {
      std::string target = p.ident("component name");
      p.keyword("n");
      Int n = p.integer("parameter n");
      p.end();
      return RemoveTorus{std::move(target), std::move(n)};
    }
    p.fail("unknown macro '" + which + "'");
  }
  if (head == "assert") {
    const std::string& what = p.next("an assertion kind");
    if (what == "char") {
      p.end();
      return AssertStmt{AssertStmt::Kind::Characteristic, 0, {}};
    }
    if (what == "empty-char") {
      p.end();
      return AssertStmt{AssertStmt::Kind::EmptyChar, 0, {}};
    }
    if (what == "b2") {
      Int v = p.integer("b2 value");
      p.end();
      return AssertStmt{AssertStmt::Kind::B2, std::move(v), {}};
    }
    if (what == "sigma") {
      Int v = p.integer("sigma value");
      p.end();
      return AssertStmt{AssertStmt::Kind::Sigma, std::move(v), {}};
    }
    if (what == "c") {
      p.keyword("=");
      auto names = parse_name_set(p);
      return AssertStmt{AssertStmt::Kind::CharSet, 0, std::move(names)};
    }
    p.fail("unknown assertion '" + what + "'");
  }
  p.fail("unknown statement '" + head + "'");
}

}  // namespace

std::vector<Move> parse_script(const std::string& text) {
  std::vector<Move> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    LineParser p{line_no, {}, 0};
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) p.tok.push_back(t);
    if (p.tok.empty()) continue;
    out.push_back(parse_statement(p));
  }
  return out;
}

namespace {

std::string signed_unit(int sign) { return sign > 0 ? "+1" : "-1"; }

std::string name_set(const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += ",";
    s += names[i];
  }
  return s + "}";
}

struct Printer {
  std::string operator()(const BlowUp& m) const {
    return "blowup " + signed_unit(m.sign) + " as " + m.name;
  }
  std::string operator()(const BlowDown& m) const { return "blowdown " + m.name; }
  std::string operator()(const Slide& m) const {
    return "slide " + m.moving + (m.sign > 0 ? " + " : " - ") + m.over;
  }
  std::string operator()(const BlowUpAcross& m) const {
    return "macro blowup-across " + m.target + " x " + m.multiplicity.get_str() +
           " " + signed_unit(m.sign) + " as " + m.name;
  }
  std::string operator()(const RemoveTorus& m) const {
    return "macro remove-torus " + m.target + " n " + m.n.get_str();
  }
  std::string operator()(const AssertStmt& m) const {
    switch (m.kind) {
      case AssertStmt::Kind::Characteristic:
        return "assert char";
      case AssertStmt::Kind::EmptyChar:
        return "assert empty-char";
      case AssertStmt::Kind::B2:
        return "assert b2 " + m.value.get_str();
      case AssertStmt::Kind::Sigma:
        return "assert sigma " + m.value.get_str();
      case AssertStmt::Kind::CharSet:
        return "assert c = " + name_set(m.names);
    }
    return {};
  }
};

}  // namespace

std::string print_move(const Move& m) { return std::visit(Printer{}, m); }

std::string print_script(const std::vector<Move>& script) {
  std::string out;
  for (const Move& m : script) {
    out += print_move(m);
    out += '\n';
  }
  return out;
}

}  // namespace kirby
