#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "h1forge/cohomology.hpp"
#include "h1forge/corpus.hpp"

namespace h1f {

enum class SolverChoice : uint8_t { Auto, Presentation, Table };

const char* solver_choice_name(SolverChoice s);
SolverChoice solver_choice_from_name(const std::string& s);  // BadInput

// One sweep = the corpus lists restricted to a dimension range, a field list
// and a set of Aschbacher class tags, solved row by row.
struct SweepConfig {
  uint32_t n_min = 2;
  uint32_t n_max = 2;
  std::vector<std::pair<uint64_t, uint32_t>> fields;  // (p, m)
  std::vector<std::string> classes;  // C1..C9, or "*" for every class
  SolverChoice solver = SolverChoice::Auto;
  uint64_t enum_cap = kEnumCap;      // must stay <= kEnumCap
  uint64_t oracle_cap = kOracleCap;  // must stay <= kOracleCap
  std::string output;                // path prefix for the CLI emitters
  uint32_t parallelism = 0;          // 0 = logical core count
  bool spot_check = true;
};

SweepConfig parse_sweep_config(const std::string& text);
std::string show_sweep_config(const SweepConfig& c);

struct ResultRow {
  std::string id;
  std::string list;
  std::string item;
  std::string aclass;
  std::string tag;
  uint64_t fingerprint = 0;
  uint32_t n = 0;
  uint64_t p = 0;
  uint32_t m = 1;
  uint64_t order = 0;
  bool faithful = false;
  bool irreducible = false;
  bool semisimple = false;
  int64_t z1 = -1;  // -1 while the row carries an error
  int64_t b1 = -1;
  int64_t h1 = -1;
  std::string solver;
  std::vector<std::string> reductions;
  std::string bound_status;  // AboveBound | BelowBound vs p > (2n+1)^2
  std::string predicted;     // catalog verdict for family-tagged rows
  bool violation = false;
  std::string error;  // nonempty when elaboration or solving failed
  uint64_t millis = 0;
  bool from_cache = false;
};

struct SweepSummary {
  uint64_t rows = 0;
  uint64_t errors = 0;
  uint64_t violations = 0;
  uint64_t cache_hits = 0;
};

struct SweepResult {
  std::vector<ResultRow> rows;  // sorted by (n, p, m, list, item, tag, id)
  SweepSummary summary;
};

// Worker pool over independent rows. Expected per-row failures (bad
// parameters, caps) land in the row's error field; solver disagreements
// throw InvariantError and abort the sweep. Results are cached per
// (fingerprint, row key) under cache_dir(); re-runs hit the cache.
SweepResult run_sweep(const SweepConfig& cfg);

// H1FORGE_CACHE when set, else .h1forge-cache in the working directory.
std::string cache_dir();

// Frozen column order:
// id,list,item,class,tag,fingerprint,n,p,m,order,faithful,irreducible,
// semisimple,z1,b1,h1,solver,reductions,bound,predicted,violation,error,
// millis. The timing column is emitted only with include_timing and is the
// only part of the surface allowed to differ between identical re-runs.
std::string rows_to_csv(const std::vector<ResultRow>& rows,
                        bool include_timing);
std::string sweep_to_json(const SweepResult& r, bool include_timing);

}  // namespace h1f
