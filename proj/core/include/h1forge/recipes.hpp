#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "h1forge/gmodule.hpp"
#include "h1forge/group.hpp"

namespace h1f {

struct GroupSpec;

enum class CyclicEmbedding : uint8_t { Scalar, Split, Nonsplit, Jordan };

const char* cyclic_embedding_name(CyclicEmbedding e);
CyclicEmbedding cyclic_embedding_from_name(const std::string& s);

struct GeneratorsSpec {
  std::vector<std::string> mats;  // parse_matrix text form
};

struct CyclicSpec {
  uint64_t order;
  CyclicEmbedding embedding;
};

// order = 2k, the full group order
struct QuaternionSpec {
  uint64_t order;
};

struct DihedralSpec {
  uint64_t order;
};

struct SLSpec {
  uint32_t n;
  uint64_t q;
};

struct SU3Spec {
  uint64_t q;  // entries land in F_{q^2}
};

struct SO3Spec {
  uint64_t q;
};

// inner acts on each of the r blocks of size t; the block-permutation part
// is the full symmetric group S_r
struct WreathBlockSpec {
  uint32_t t;
  uint32_t r;
  uint32_t inner_dim;  // = t
  std::shared_ptr<GroupSpec> inner;
};

struct CentralProductTensorSpec {
  uint32_t left_dim;
  uint32_t right_dim;
  std::shared_ptr<GroupSpec> left;
  std::shared_ptr<GroupSpec> right;
};

// r = 2: the quaternion group with a normalizing top, params "C3" (order 24)
// or "S3" (order 48), inside SL_2. r = 3: 3^{1+2} with its symplectic-type
// normalizer inside SL_3 (params unused).
struct ExtraspecialNormalizerSpec {
  uint32_t r;
  uint32_t t;
  std::string params;
};

// k = twists.size() tensor copies of the base group's natural module,
// twisted entrywise by frobenius^twists[i] and permuted by perm.
struct TwistedTensorSpec {
  uint32_t base_dim;
  std::shared_ptr<GroupSpec> base;
  std::vector<uint64_t> twists;
  std::vector<uint32_t> perm;
};

struct GroupSpec {
  std::variant<GeneratorsSpec, CyclicSpec, QuaternionSpec, DihedralSpec,
               SLSpec, SU3Spec, SO3Spec, WreathBlockSpec,
               CentralProductTensorSpec, ExtraspecialNormalizerSpec,
               TwistedTensorSpec>
      v;
};

struct SpecContext {
  FieldRef F;
  uint32_t dim;
};

// Deterministic elaboration into explicit generators, enumerated. Every
// branch certifies its construction (order formula or target order) and
// throws UnsupportedParams naming the recipe when the parameters do not
// embed over the stated field.
GroupRef elaborate(const GroupSpec& spec, const SpecContext& ctx);

// Same elaboration, but recipes with module structure keep it: the central
// product yields a Tensor-provenance module and TwistedTensor yields the
// twisted action over the base group. Everything else acts naturally.
GModule elaborate_module(const GroupSpec& spec, const SpecContext& ctx);

// Short display form, e.g. "Quaternion(56)" or "SL(2,9)".
std::string recipe_tag(const GroupSpec& spec);

// Regular representation of the degree-n extension E of the prime field:
// the matrix of v -> gamma v (resp. the semilinear v -> c v^{p^jf}) on the
// power basis 1, x, ..., x^{n-1}. base must be the prime field of E.
Mat regrep_mult(const FieldRef& base, const FieldRef& E, uint32_t n,
                Fel gamma);
Mat regrep_semilinear(const FieldRef& base, const FieldRef& E, uint32_t n,
                      Fel c, uint64_t jf);

// First pair (a, b) in ascending packed order with a^2 + b^2 = -1, returned
// as the quaternion seed matrices i = [[0,1],[-1,0]], j = [[a,b],[b,-a]].
// Odd characteristic only.
std::pair<Mat, Mat> quaternion_seed(const FieldRef& F);

// One group-spec document: {"field": {"p", "m"}, "dim",
// "recipe" | "generators"}.
struct SpecFile {
  SpecContext ctx;
  GroupSpec spec;
};

SpecFile parse_spec_file(const std::string& json_text);
std::string show_spec_file(const SpecFile& sf);  // canonical round-trip form

}  // namespace h1f
