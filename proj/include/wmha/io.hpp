#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "wmha/algebroid.hpp"
#include "wmha/examples.hpp"
#include "wmha/groupoid.hpp"
#include "wmha/reconstruction.hpp"

namespace wmha {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Malformed JSON text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
// Well-formed JSON that does not match the definition schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Groupoid files either carry an arrow table or name the lazily presented
// pair groupoid on the natural numbers.
enum class GroupoidModel { Function, Convolution };
struct GroupoidDefinition {
  std::optional<Groupoid> table;
  bool lazy_pair = false;
  GroupoidModel model = GroupoidModel::Function;
};

struct SeparabilityDefinition {
  FiniteAlgebra B;
  FiniteAlgebra C;
  Matrix S_B;
  Vector phi_B;
};

struct TwistDefinition {
  Wmha wmha;
  Matrix B_emb;
  TwistData twist;
};

using DefinitionValue = std::variant<FiniteAlgebra, GroupoidDefinition, Wmha, Algebroid,
                                     SeparabilityDefinition, TwistDefinition>;

struct Definition {
  std::string kind;
  std::string name;
  std::string description;
  // Expected verdict metadata: "success" or an obstruction stage name.
  std::optional<std::string> expected;
  DefinitionValue value;
};

// Throws ParseError or SchemaError.
Definition parse_definition(const std::string& text);
Definition load_definition(const std::string& path);
std::string dump_definition(const Definition& d);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Json matrix_to_json(const Matrix& m);
Json algebra_to_json(const FiniteAlgebra& a);
Json wmha_to_json(const Wmha& w);
Json algebroid_to_json(const Algebroid& a);

Json report_to_json(const Report& r);
Json obstruction_to_json(const ObstructionReport& o, const FiniteAlgebra& a);
// One line per check followed by the summary verdict.
std::string report_to_text(const Report& r);

}  // namespace wmha
