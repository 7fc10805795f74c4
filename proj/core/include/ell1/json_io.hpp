#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ell1/ideals.hpp"
#include "ell1/sspace.hpp"

namespace ell1 {

/// Output JSON tree with insertion-ordered object keys and numbers printed
/// with 17 significant digits, so results are byte-stable and round-trip
/// losslessly.
class JsonValue {
public:
  JsonValue() : kind_(Kind::Null) {}
  static JsonValue null();
  static JsonValue boolean(bool b);
  static JsonValue number(double x);
  static JsonValue integer(long long n);
  static JsonValue string(std::string s);
  static JsonValue array(std::vector<JsonValue> items = {});
  static JsonValue object();

  void push_back(JsonValue v);
  void set(const std::string& key, JsonValue v);

  std::string dump(int indent = -1) const;

private:
  enum class Kind { Null, Bool, Number, Integer, String, Array, Object };
  void write(std::string& out, int indent, int depth) const;

  Kind kind_;
  bool bool_ = false;
  double num_ = 0;
  long long int_ = 0;
  std::string str_;
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> fields_;
};

JsonValue complex_to_json(Complex z);

// -- parsing (throws ParseError on malformed input, DomainError on
//    semantically invalid values) --

DynSystem parse_system(const std::string& text);
Point parse_point(const DynSystem& sys, const std::string& text);
AlgebraElement parse_element(const DynSystem& sys, const std::string& text);
SeqVector parse_seq_vector(const std::string& text);
PrimitiveIdealId parse_ideal(const DynSystem& sys, const std::string& text);
CircleSet parse_circle_set(const std::string& text);
StructureSet parse_structure_set(const std::string& text);

// -- serialization --

JsonValue system_to_json(const DynSystem& sys);
JsonValue point_to_json(const Point& x);
JsonValue element_to_json(const AlgebraElement& a);
JsonValue seq_vector_to_json(const SeqVector& v);
JsonValue matrix_to_json(const ComplexMatrix& m);
JsonValue circle_set_to_json(const CircleSet& s);
JsonValue structure_set_to_json(const StructureSet& s);
JsonValue ideal_to_json(const PrimitiveIdealId& id);
JsonValue orbit_to_json(const Orbit& o);
JsonValue witness_to_json(const WienerWitness& w);

struct Diagnostic {
  std::string path;
  std::string message;
};

/// Schema/semantic validation with diagnostics instead of exceptions.
/// `kind` is one of system, element, vector, ideal, circleset,
/// structureset, or empty for detection by shape.
std::vector<Diagnostic> validate_formats(const std::string& text, const std::string& kind = "",
                                         const DynSystem* sys = nullptr);

}  // namespace ell1
