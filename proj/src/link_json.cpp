#include "kirbyspin/link_json.hpp"

#include <cctype>

#include "kirbyspin/error.hpp"

namespace kirby {

nlohmann::ordered_json int_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Int parse_int_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    bool digits = k < s.size();
    for (std::size_t i = k; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) digits = false;
    if (digits) return Int(s);
    throw ParseError(where + ": '" + s + "' is not an integer");
  }
  throw ParseError(where + ": expected an integer (number or decimal string)");
}

nlohmann::ordered_json framed_link_json(const FramedLink& l) {
  nlohmann::ordered_json j;
  j["names"] = l.names;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < l.q.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < l.q.dim(); ++k) row.push_back(int_json(l.q.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

FramedLink parse_framed_link(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("link: expected a JSON object");
  if (!j.contains("names") || !j["names"].is_array())
    throw ParseError("link: missing 'names' array");
  if (!j.contains("matrix") || !j["matrix"].is_array())
    throw ParseError("link: missing 'matrix' array");

  std::vector<std::string> names;
  for (std::size_t i = 0; i < j["names"].size(); ++i) {
    const auto& e = j["names"][i];
    if (!e.is_string())
      throw ParseError("names[" + std::to_string(i) + "]: expected a string");
    names.push_back(e.get<std::string>());
  }

  const auto& mj = j["matrix"];
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < mj.size(); ++i) {
    if (!mj[i].is_array())
      throw ParseError("matrix[" + std::to_string(i) + "]: expected an array");
    std::vector<Int> row;
    for (std::size_t k = 0; k < mj[i].size(); ++k)
      row.push_back(parse_int_json(
          mj[i][k], "matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    rows.push_back(std::move(row));
  }
  if (rows.size() != names.size())
    throw ParseError("matrix has " + std::to_string(rows.size()) +
                     " rows but there are " + std::to_string(names.size()) +
                     " components");
  SymMatrix m;
  try {
    m = SymMatrix::from_rows(rows);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  try {
    return make_framed_link(std::move(names), std::move(m));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json parse_json_text(const std::string& text, const std::string& what) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(what + ": malformed JSON");
  return j;
}

}  // namespace kirby
