#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ad2mcrl2/mcrl2/ast.hpp"
#include "ad2mcrl2/mcrl2/names.hpp"
#include "ad2mcrl2/oracle/semantics.hpp"

// Strict evaluator for the emitted data-expression subset.
namespace ad2mcrl2::oracle {

// Closed constructor term in emitted-name space; booleans are `true` and
// `false` heads.
struct Term {
  std::string head;
  std::vector<Term> args;

  bool operator==(const Term&) const = default;
  friend bool operator<(const Term& a, const Term& b);
};

std::string to_string(const Term& t);

using TermEnv = std::map<std::string, Term>;

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Constructors, projections and equations of one emitted mCRL2 text.
class Mcrl2Model {
 public:
  explicit Mcrl2Model(const mcrl2::Spec& spec);

  // Throws EvalError on unbound names or ill-formed applications.
  Term eval(const mcrl2::Expr& e, const TermEnv& env) const;

  // Every value of a sort, constructors in declaration order.
  std::vector<Term> values(const std::string& sort) const;

  const mcrl2::Spec& spec() const { return spec_; }

 private:
  struct Projection {
    std::string constructor;
    std::size_t index;
  };
  const mcrl2::Spec& spec_;
  std::map<std::string, std::string> constructors_;  // constructor -> sort
  std::map<std::string, std::vector<Projection>> projections_;
  std::map<std::string, const mcrl2::SortDecl*> sorts_;
  std::map<std::string, const mcrl2::EqnDecl*> equations_;
};

Term to_term(const Value& v, const check::ModelIndex& index, const mcrl2::NameTable& names);
Value from_term(const Term& t, const check::ModelIndex& index, const mcrl2::NameTable& names);

// Outcome of firing one summand of an emitted glue process.
struct SolvedStep {
  std::map<std::string, Term> sum;                       // summation variable -> value
  std::vector<std::pair<std::string, Term>> actions;     // action name -> argument
  std::map<std::string, Term> next;                      // process parameter -> new value
};

// Binds the process parameters to `state` and the given summation variables,
// then solves the remaining ones by propagating over conjuncts `o == e`:
// each unknown `o` must have exactly one satisfying value of its sort. The
// whole condition must hold afterwards. Throws EvalError otherwise.
SolvedStep solve_step(const Mcrl2Model& model, const mcrl2::ProcDecl& proc, const TermEnv& state,
                      const TermEnv& given);

}  // namespace ad2mcrl2::oracle
