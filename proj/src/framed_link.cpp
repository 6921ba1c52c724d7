#include "kirbyspin/framed_link.hpp"

#include <unordered_set>

#include "kirbyspin/error.hpp"

namespace kirby {

std::optional<std::size_t> FramedLink::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

void FramedLink::validate() const {
  if (q.dim() != names.size())
    throw Error("linking matrix is " + std::to_string(q.dim()) + "x" +
                std::to_string(q.dim()) + " but there are " +
                std::to_string(names.size()) + " component names");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("component names must be non-empty");
    if (!seen.insert(n).second) throw Error("duplicate component name '" + n + "'");
  }
}

FramedLink make_framed_link(std::vector<std::string> names, SymMatrix q) {
  FramedLink l{std::move(names), std::move(q)};
  l.validate();
  return l;
}

FramedLink l_n_trace(const Int& p, const Int& q) {
  // Odd framings are what make K1 and K2 the characteristic sublinks.
  if (!is_odd(p) || !is_odd(q))
    throw Error("chain framings must be odd, got p = " + p.get_str() +
                ", q = " + q.get_str());
  SymMatrix m(2);
  m.set(0, 0, p);
  m.set(1, 1, q);
  m.set(0, 1, 1);
  return make_framed_link({"K1", "K2"}, std::move(m));
}

}  // namespace kirby
