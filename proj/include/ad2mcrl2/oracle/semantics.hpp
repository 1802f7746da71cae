#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ad2mcrl2/check/checker.hpp"

// Reference token-flow semantics of leaf and glue activities. Works on the raw
// document; the scope graph and the shapes computed by the checker are not
// consulted.
namespace ad2mcrl2::oracle {

// Enumeration literal (`literal` set, no fields) or block value (fields in
// property order). `type_id` is the declaring element's xmi:id.
struct Value {
  std::string type_id;
  std::string literal;
  std::vector<Value> fields;

  bool operator==(const Value&) const = default;
  // Defaulted <=> is deleted for self-recursive members on some compilers.
  friend bool operator<(const Value& a, const Value& b);
};

std::string to_string(const Value& v);

// Parameter or attribute id -> value.
using Valuation = std::map<std::string, Value>;
using GlueState = Valuation;

class Domains {
 public:
  explicit Domains(const xmi::XmiDocument& doc);

  // Number of values of a type, saturating at `cap`.
  std::uint64_t count(const std::string& type_id, std::uint64_t cap = UINT64_MAX) const;
  // All values, in literal / field order. Only for small types.
  std::vector<Value> all(const std::string& type_id) const;
  Value random(const std::string& type_id, std::mt19937_64& rng) const;

  const check::ModelIndex& index() const { return index_; }

 private:
  check::ModelIndex index_;
};

// Type id of a parameter, pin or attribute.
std::string declared_type(const check::ModelIndex& index, const std::string& element_id);

Value eval_leaf(const xmi::Activity& a, const Valuation& inputs, const check::TypedModel& tm);

struct GlueStep {
  Valuation outputs;
  GlueState state;
};

// One cycle: every call in dependency order, outputs assembled, writes read
// the old state and produce the new one.
GlueStep step_glue(const xmi::Activity& a, const GlueState& state, const Valuation& inputs,
                   const check::TypedModel& tm);

GlueState initial_state(const xmi::Activity& a, const check::TypedModel& tm);

// Input parameters (leaf or glue): parameters no flow targets, in
// declaration order.
std::vector<const xmi::ActivityParameter*> input_parameters(const xmi::Activity& a);
std::vector<const xmi::ActivityParameter*> output_parameters(const xmi::Activity& a);

}  // namespace ad2mcrl2::oracle
