#include "szt/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace szt {

namespace {

using nlohmann::json;

Rat parse_entry(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(Int(std::to_string(v.get<long long>())));
  if (v.is_string()) {
    try {
      return rat_from_string(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected integer or rational string");
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return it.key() == k;
        }) == allowed.end())
      throw ParseError(where + ": unknown field \"" + it.key() + "\"");
  }
}

}  // namespace

Arrangement parse_arrangement(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  reject_unknown(doc, {"n", "hyperplanes"}, "top level");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("missing integer field \"n\"");
  long long n = doc["n"].get<long long>();
  if (n < 1 || n > 62) throw ParseError("n out of range (1..62)");
  if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array())
    throw ParseError("missing array field \"hyperplanes\"");

  std::vector<Hyperplane> hs;
  int pos = 0;
  for (const json& h : doc["hyperplanes"]) {
    ++pos;
    std::string where = "hyperplane " + std::to_string(pos);
    if (!h.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown(h, {"normal", "multiplicity", "label"}, where);
    if (!h.contains("normal") || !h["normal"].is_array())
      throw ParseError(where + ": missing array field \"normal\"");
    const json& nv = h["normal"];
    if ((long long)nv.size() != n)
      throw ParseError(where + ": normal has " + std::to_string(nv.size()) +
                       " entries, expected " + std::to_string(n));
    std::vector<Rat> normal;
    bool nonzero = false;
    for (size_t i = 0; i < nv.size(); ++i) {
      normal.push_back(parse_entry(nv[i], where + ", entry " + std::to_string(i + 1)));
      if (normal.back() != 0) nonzero = true;
    }
    if (!nonzero) throw ParseError(where + ": zero normal vector");
    long long mult = 1;
    if (h.contains("multiplicity")) {
      if (!h["multiplicity"].is_number_integer() || h["multiplicity"].get<long long>() < 1)
        throw ParseError(where + ": multiplicity must be a positive integer");
      mult = h["multiplicity"].get<long long>();
    }
    std::string label = "H" + std::to_string(pos);
    if (h.contains("label")) {
      if (!h["label"].is_string()) throw ParseError(where + ": label must be a string");
      label = h["label"].get<std::string>();
    }
    for (long long c = 0; c < mult; ++c) hs.push_back(Hyperplane{normal, label});
    if ((long long)hs.size() > 62) throw ParseError("too many hyperplanes (limit 62)");
  }
  return Arrangement((int)n, hs);
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str());
}

std::string arrangement_to_json(const Arrangement& A) {
  json doc;
  doc["n"] = A.dim();
  json list = json::array();
  for (int i = 0; i < A.size(); ++i) {
    const Hyperplane& h = A.hyperplane(i);
    json entry;
    json nv = json::array();
    for (const Rat& c : h.normal) nv.push_back(to_string(c));
    entry["normal"] = nv;
    entry["multiplicity"] = 1;
    entry["label"] = h.label;
    list.push_back(entry);
  }
  doc["hyperplanes"] = list;
  return doc.dump(2) + "\n";
}

namespace {

// prints c*v^e with sign handling; omits coefficient 1 next to a variable
void append_term(std::string& out, const Int& c, const std::string& mon) {
  Int a = c < 0 ? Int(-c) : c;
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (a != 1 || mon.empty()) out += to_string(a);
  out += mon;
}

std::string power_str(const std::string& v, int e) {
  if (e == 0) return "";
  if (e == 1) return v;
  return v + "^" + std::to_string(e);
}

}  // namespace

std::string series_to_text(const BiPoly& S, const std::string& v1, const std::string& v2) {
  if (S.is_zero()) return "0";
  std::map<int, std::map<int, Int>> by_t;
  for (const auto& [de, c] : S.terms()) by_t[de.second][de.first] = c;
  std::string out;
  for (const auto& [tpow, row] : by_t) {
    std::string inner;
    for (const auto& [qpow, c] : row) append_term(inner, c, power_str(v1, qpow));
    if (!out.empty()) out += " + ";
    if (tpow == 0) {
      out += row.size() > 1 ? "(" + inner + ")" : inner;
    } else {
      out += power_str(v2, tpow);
      if (row.size() > 1)
        out += "(" + inner + ")";
      else if (inner != "1")
        out += "*" + inner;
    }
  }
  return out;
}

std::string poly_to_text(const BiPoly& P, const std::string& v1, const std::string& v2) {
  if (P.is_zero()) return "0";
  // decreasing x-exponent, then decreasing y-exponent
  std::map<std::pair<int, int>, Int, std::greater<>> sorted;
  for (const auto& [de, c] : P.terms()) sorted[de] = c;
  std::string out;
  for (const auto& [de, c] : sorted) {
    std::string mon = power_str(v1, de.first);
    std::string m2 = power_str(v2, de.second);
    if (!mon.empty() && !m2.empty()) mon += "*";
    mon += m2;
    append_term(out, c, mon);
  }
  return out;
}

std::string unipoly_to_text(const std::vector<Int>& coeffs, const std::string& var) {
  std::string out;
  for (int e = (int)coeffs.size() - 1; e >= 0; --e) {
    if (coeffs[e] == 0) continue;
    append_term(out, coeffs[e], power_str(var, e));
  }
  return out.empty() ? "0" : out;
}

}  // namespace szt
