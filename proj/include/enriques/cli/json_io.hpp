#pragma once

// JSON input and output for the command-line front end. Integers are read and
// written with no width limit: numbers too large for 64 bits are kept as
// their decimal lexeme, and the writer emits Integer values verbatim.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "enriques/lattice.hpp"

namespace enriques::cli {

using Json = nlohmann::json;

// Malformed input or usage; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses one JSON document. Integers that overflow 64 bits become strings
// holding their decimal digits. InputError on malformed text.
Json parse_json(std::string_view text);

// Accepts a JSON integer or a string of decimal digits with optional sign.
Integer json_integer(const Json& j, std::string_view what);

// VectorInput: a flat array [u1, u2, e1..e8] or {u: [a, b], e8: [...],
// torsion: 0|1}. Unknown keys in the structured form are rejected.
PicClass parse_vector_input(const Json& j);
PicClass parse_vector_text(std::string_view text);

// Canonical VectorInput text: the flat array when the torsion bit is 0, the
// structured record otherwise (the flat form cannot carry torsion).
std::string format_vector_input(const PicClass& c);

// "[a, b, ...]" with bare decimal integers, no spaces.
std::string json_array(const LatticeVector& v);
std::string json_string(std::string_view s);

// Builds a JSON object with keys in insertion order; values are raw JSON text.
class ObjectWriter {
 public:
  ObjectWriter& raw(std::string_view key, std::string_view json_value);
  ObjectWriter& field(std::string_view key, const Integer& v);
  ObjectWriter& field(std::string_view key, long v);
  ObjectWriter& field(std::string_view key, bool v);
  ObjectWriter& field(std::string_view key, std::string_view v);
  ObjectWriter& field(std::string_view key, const char* v) { return field(key, std::string_view(v)); }
  ObjectWriter& null(std::string_view key);
  std::string str() const;

 private:
  std::vector<std::string> parts_;
};

}  // namespace enriques::cli
