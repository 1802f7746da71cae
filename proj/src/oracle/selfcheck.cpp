#include "ad2mcrl2/oracle/selfcheck.hpp"

#include <random>

#include "ad2mcrl2/mcrl2/emitter.hpp"
#include "ad2mcrl2/oracle/mcrl2_eval.hpp"

namespace ad2mcrl2::oracle {

namespace {

constexpr std::size_t kMaxFailures = 5;

void record(SweepResult& r, std::string what) {
  ++r.mismatches;
  if (r.failures.size() < kMaxFailures) r.failures.push_back(std::move(what));
}

}  // namespace

std::uint64_t SelfcheckReport::cases() const {
  std::uint64_t n = 0;
  for (const auto& r : leaves) n += r.cases;
  for (const auto& r : glues) n += r.cases;
  return n;
}

std::uint64_t SelfcheckReport::mismatches() const {
  std::uint64_t n = 0;
  for (const auto& r : leaves) n += r.mismatches;
  for (const auto& r : glues) n += r.mismatches;
  return n;
}

SweepResult sweep_leaf(const xmi::Activity& a, const check::TypedModel& tm, const mcrl2::Spec& spec,
                       const mcrl2::NameTable& names, const SweepOptions& opts) {
  SweepResult r;
  r.activity = a.name;
  const Domains dom(*tm.doc);
  const Mcrl2Model model(spec);
  const std::string map_name = names.at(mcrl2::map_key(a.id));
  const mcrl2::EqnDecl* eqn = nullptr;
  for (const auto& e : spec.eqns) {
    if (e.lhs.name == map_name) eqn = &e;
  }
  if (!eqn) {
    record(r, "no equation for " + map_name);
    return r;
  }

  const auto inputs = input_parameters(a);
  std::uint64_t total = 1;
  for (const auto* p : inputs) {
    const std::uint64_t k = dom.count(p->type, opts.cap + 1);
    total = (k != 0 && total > (opts.cap + 1) / k) ? opts.cap + 1 : total * k;
  }
  r.exhaustive = total <= opts.cap;

  auto run = [&](const Valuation& v) {
    ++r.cases;
    TermEnv env;
    for (const auto* p : inputs) env[names.at(p->id)] = to_term(v.at(p->id), dom.index(), names);
    Value expected;
    try {
      expected = eval_leaf(a, v, tm);
    } catch (const std::exception& ex) {
      record(r, std::string("interpreter: ") + ex.what());
      return;
    }
    try {
      const Term got = model.eval(eqn->rhs, env);
      const Term want = to_term(expected, dom.index(), names);
      if (got != want) record(r, map_name + ": expected " + to_string(want) + ", emitted " + to_string(got));
    } catch (const std::exception& ex) {
      record(r, std::string("evaluator: ") + ex.what());
    }
  };

  if (r.exhaustive) {
    std::vector<std::vector<Value>> domains;
    for (const auto* p : inputs) domains.push_back(dom.all(p->type));
    std::vector<std::size_t> idx(inputs.size(), 0);
    while (true) {
      Valuation v;
      for (std::size_t i = 0; i < inputs.size(); ++i) v[inputs[i]->id] = domains[i][idx[i]];
      run(v);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == domains[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
      Valuation v;
      for (const auto* p : inputs) v[p->id] = dom.random(p->type, rng);
      run(v);
    }
  }
  return r;
}

SweepResult sweep_glue(const xmi::Activity& a, const check::TypedModel& tm, const mcrl2::Spec& spec,
                       const mcrl2::NameTable& names, const SweepOptions& opts) {
  SweepResult r;
  r.activity = a.name;
  r.exhaustive = false;
  const Domains dom(*tm.doc);
  const Mcrl2Model model(spec);
  const mcrl2::ProcDecl* proc = nullptr;
  for (const auto& p : spec.procs) {
    if (p.name == names.at(a.id)) proc = &p;
  }
  if (!proc) {
    record(r, "no process for " + a.name);
    return r;
  }
  const auto inputs = input_parameters(a);
  const auto outputs = output_parameters(a);
  std::mt19937_64 rng(opts.seed);
  for (std::uint64_t i = 0; i < opts.glue_steps; ++i) {
    ++r.cases;
    GlueState st;
    for (const auto& attr : a.attributes) st[attr.id] = dom.random(attr.type, rng);
    Valuation in;
    for (const auto* p : inputs) in[p->id] = dom.random(p->type, rng);

    TermEnv state, given;
    for (const auto& attr : a.attributes) state[names.at(attr.id)] = to_term(st.at(attr.id), dom.index(), names);
    for (const auto* p : inputs) given[names.at(p->id)] = to_term(in.at(p->id), dom.index(), names);
    try {
      const GlueStep want = step_glue(a, st, in, tm);
      const SolvedStep got = solve_step(model, *proc, state, given);
      std::map<std::string, Term> acts(got.actions.begin(), got.actions.end());
      bool same = acts.size() == outputs.size() + inputs.size();
      for (const auto* p : outputs) {
        auto it = acts.find(names.at(p->id));
        same = same && it != acts.end() && it->second == to_term(want.outputs.at(p->id), dom.index(), names);
      }
      for (const auto* p : inputs) {
        auto it = acts.find(names.at(p->id));
        same = same && it != acts.end() && it->second == given.at(names.at(p->id));
      }
      for (const auto& attr : a.attributes) {
        same = same && got.next.at(names.at(attr.id)) == to_term(want.state.at(attr.id), dom.index(), names);
      }
      if (!same) record(r, a.name + ": step " + std::to_string(i) + " differs from the emitted process");
    } catch (const std::exception& ex) {
      record(r, a.name + ": step " + std::to_string(i) + ": " + ex.what());
    }
  }
  return r;
}

SelfcheckReport selfcheck(const check::TypedModel& tm, const SweepOptions& opts) {
  const mcrl2::Emitter emitter(tm);
  const mcrl2::Spec spec = emitter.assemble_spec();
  SelfcheckReport report;
  for (const auto* a : tm.index->activities()) {
    if (tm.leaves.count(a->id)) report.leaves.push_back(sweep_leaf(*a, tm, spec, emitter.names(), opts));
    if (tm.glues.count(a->id)) report.glues.push_back(sweep_glue(*a, tm, spec, emitter.names(), opts));
  }
  return report;
}

}  // namespace ad2mcrl2::oracle
