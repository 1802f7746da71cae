#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ad2mcrl2/check/checker.hpp"
#include "ad2mcrl2/mcrl2/ast.hpp"
#include "ad2mcrl2/mcrl2/names.hpp"

namespace ad2mcrl2::oracle {

struct SweepOptions {
  std::uint64_t cap = 1'000'000;     // full product up to this many valuations
  std::uint64_t samples = 100'000;   // seeded sample size beyond the cap
  std::uint64_t glue_steps = 1000;
  std::uint64_t seed = 20240531;
};

struct SweepResult {
  std::string activity;  // activity name
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  bool exhaustive = true;
  std::vector<std::string> failures;  // first few, human readable
};

struct SelfcheckReport {
  std::vector<SweepResult> leaves;
  std::vector<SweepResult> glues;

  std::uint64_t cases() const;
  std::uint64_t mismatches() const;
  bool ok() const { return mismatches() == 0; }
};

// Emitted equation body against eval_leaf on every input valuation (or a
// seeded sample when the product exceeds the cap).
SweepResult sweep_leaf(const xmi::Activity& a, const check::TypedModel& tm, const mcrl2::Spec& spec,
                       const mcrl2::NameTable& names, const SweepOptions& opts);

// step_glue against solving the emitted process condition on random states
// and inputs.
SweepResult sweep_glue(const xmi::Activity& a, const check::TypedModel& tm, const mcrl2::Spec& spec,
                       const mcrl2::NameTable& names, const SweepOptions& opts);

SelfcheckReport selfcheck(const check::TypedModel& tm, const SweepOptions& opts = {});

}  // namespace ad2mcrl2::oracle
