#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "h1forge/gmodule.hpp"

namespace h1f {

// Full-table solver rejects systems with more than this many unknown columns
// ((|G|-1) * dim).
inline constexpr uint64_t kOracleCap = 50000;
// Exhaustive closure-pair certification runs while |pairs| * |kernel basis|
// stays under this; past it a seeded random sample of pairs is used.
inline constexpr uint64_t kPairCertifyBudget = 40000000;
// Clifford/Shapiro descent recursion depth.
inline constexpr uint32_t kReductionDepthCap = 4;

// A 1-cocycle, stored by its values on the generator slots and extended to
// any element through the BFS tree via Z(g s) = Z(g) + g Z(s).
struct Cocycle {
  std::vector<Vec> gen_values;  // one vector of length dim per generator slot
};

Vec cocycle_value(const GModule& M, const Cocycle& Z, uint32_t e);
std::vector<Vec> cocycle_table(const GModule& M, const Cocycle& Z);
// Checks Z(gh) = Z(g) + g Z(h): always on every Cayley edge, plus all pairs
// of the multiplication table within budget (a seeded sample past it).
bool verify_cocycle(const GModule& M, const Cocycle& Z);
// The coboundary g -> (g - I) v.
Cocycle coboundary(const GModule& M, const Vec& v);

enum class SolverKind { Presentation, FullTable };

enum class Reduction {
  SylowTrivial,
  SylowRestriction,
  NormalSubgroupReduction,
  TensorSplit,
  InflationRestriction,
};

const char* solver_name(SolverKind s);
const char* reduction_name(Reduction r);

struct H1Report {
  uint64_t group_fingerprint = 0;
  uint64_t p = 0;
  uint32_t m = 1;
  uint32_t dim = 0;
  uint64_t z1 = 0, b1 = 0, h1 = 0;
  SolverKind solver = SolverKind::Presentation;
  std::vector<Reduction> reductions;
  std::optional<Vec> certificate;  // y with Z_s = (s - I) y on every slot
  uint64_t millis = 0;
};

std::string report_to_json(const H1Report& r, const Field& F);

// Direct solver over unknowns Z_g for every non-identity element: one block
// of rows per Cayley edge, sparse elimination, kernel basis certified over
// the multiplication table afterwards.
H1Report h1_full_table(const GModule& M);

// Direct solver over generator-slot unknowns only: one block of rows per
// non-tree Cayley edge (the fundamental relations of the presentation read
// off the BFS tree).
H1Report h1_presentation(const GModule& M);

// Basis of Z^1 as cocycles on generator slots (computed presentation-style).
std::vector<Cocycle> z1_basis(const GModule& M);

struct ReductionOptions {
  // candidate normal subgroups for the reduction chain, tried in order
  std::vector<GroupRef> normals;
  bool try_sylow_restriction = true;
  bool try_tensor = true;
  uint32_t depth = 0;  // internal
};

// Reduction pipeline: trivial Sylow, Sylow restriction, normal-subgroup
// chain (fixed-point-free, inflation-restriction, Clifford/Shapiro descent),
// tensor factor vanishing; falls through to h1_presentation. Every fast path
// records its tag and fires only after its hypotheses were verified
// computationally.
H1Report h1_with_reductions(const GModule& M, const ReductionOptions& opts = {});

// Splits a cocycle on a Tensor-provenance module into a coboundary witness:
// returns y with Z_s = (act(s) - I) y for every generator slot, verified
// exactly. Requires both factors to have vanishing H^1 (checked here via
// recursive solves) unless a factor acts trivially.
Vec tensor_split(const Cocycle& Z, const GModule& M);

struct InfResDims {
  uint64_t h1_quotient = 0;   // dim H^1(G/H, V^H)
  uint64_t h1_total = 0;      // dim H^1(G, V)
  uint64_t res_image_dim = 0; // dim of the image of H^1(G,V) -> H^1(H,V)
};

// H normal in M's group; the quotient acts on H-cosets by permutation
// matrices. Asserts h1_total <= h1_quotient + res_image_dim.
InfResDims inflation_restriction_dims(const GModule& M, const MatrixGroup& H);

}  // namespace h1f
