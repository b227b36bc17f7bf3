#include "enriques/cli/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace enriques::cli {
namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// The DOM parser, except that integer lexemes the lexer could only represent
// as doubles are stored as strings.
class BigIntDomParser : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<Json>;
  using Base::Base;

  bool number_float(number_float_t val, const string_t& lexeme) {
    if (is_decimal(lexeme)) {
      string_t digits = lexeme;
      return Base::string(digits);
    }
    return Base::number_float(val, lexeme);
  }
};

std::vector<Integer> integer_list(const Json& j, std::size_t expected, std::string_view what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  if (j.size() != expected) {
    throw InputError(std::string(what) + " must have " + std::to_string(expected) + " entries, got " +
                     std::to_string(j.size()));
  }
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(json_integer(x, what));
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  Json result;
  BigIntDomParser sax(result, true);
  try {
    Json::sax_parse(text.begin(), text.end(), &sax);
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return result;
}

Integer json_integer(const Json& j, std::string_view what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (is_decimal(s)) {
      if (s.front() == '+') s.erase(0, 1);
      return Integer(s);
    }
  }
  throw InputError(std::string(what) + ": expected an integer, got " + j.dump());
}

PicClass parse_vector_input(const Json& j) {
  PicClass c;
  if (j.is_array()) {
    std::vector<Integer> xs = integer_list(j, kRank, "vector");
    for (std::size_t i = 0; i < kRank; ++i) c.num[i] = xs[i];
    return c;
  }
  if (!j.is_object()) throw InputError("vector must be a 10-element array or an object {u, e8, torsion}");
  for (const auto& [key, _] : j.items()) {
    if (key != "u" && key != "e8" && key != "torsion") throw InputError("vector: unknown key \"" + key + "\"");
  }
  if (!j.contains("u") || !j.contains("e8")) throw InputError("vector: structured form needs both u and e8");
  std::vector<Integer> u = integer_list(j.at("u"), 2, "u");
  std::vector<Integer> e8 = integer_list(j.at("e8"), 8, "e8");
  c.num[0] = u[0];
  c.num[1] = u[1];
  for (std::size_t i = 0; i < 8; ++i) c.num[i + 2] = e8[i];
  if (j.contains("torsion")) {
    const Integer t = json_integer(j.at("torsion"), "torsion");
    if (t != 0 && t != 1) throw InputError("torsion must be 0 or 1, got " + t.get_str());
    c.torsion = t == 1;
  }
  return c;
}

PicClass parse_vector_text(std::string_view text) { return parse_vector_input(parse_json(text)); }

std::string json_array(const LatticeVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < kRank; ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + "]";
}

std::string format_vector_input(const PicClass& c) {
  if (!c.torsion) return json_array(c.num);
  std::string e8 = "[";
  for (std::size_t i = 2; i < kRank; ++i) {
    if (i > 2) e8 += ",";
    e8 += c.num[i].get_str();
  }
  e8 += "]";
  return ObjectWriter()
      .raw("u", "[" + c.num[0].get_str() + "," + c.num[1].get_str() + "]")
      .raw("e8", e8)
      .field("torsion", 1L)
      .str();
}

std::string json_string(std::string_view s) { return Json(std::string(s)).dump(-1, ' ', false, Json::error_handler_t::replace); }

ObjectWriter& ObjectWriter::raw(std::string_view key, std::string_view json_value) {
  parts_.push_back(json_string(key) + ":" + std::string(json_value));
  return *this;
}

ObjectWriter& ObjectWriter::field(std::string_view key, const Integer& v) { return raw(key, v.get_str()); }
ObjectWriter& ObjectWriter::field(std::string_view key, long v) { return raw(key, std::to_string(v)); }
ObjectWriter& ObjectWriter::field(std::string_view key, bool v) { return raw(key, v ? "true" : "false"); }
ObjectWriter& ObjectWriter::field(std::string_view key, std::string_view v) { return raw(key, json_string(v)); }
ObjectWriter& ObjectWriter::null(std::string_view key) { return raw(key, "null"); }

std::string ObjectWriter::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += parts_[i];
  }
  return out + "}";
}

}  // namespace enriques::cli
