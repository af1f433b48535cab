#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "h1forge/group.hpp"
#include "h1forge/linalg.hpp"

namespace h1f {

using GroupRef = std::shared_ptr<const MatrixGroup>;

// Exhaustive line-orbit irreducibility check is attempted only while
// q^dim stays under this.
inline constexpr uint64_t kLineScanCap = 1000000;

class GModule;

enum class Prov {
  Natural,
  Trivial,
  Tensor,
  TwistedTensor,
  Induced,
  Restricted,
  Dual,
  Sub,
  Quotient,
  Custom,
};
const char* prov_name(Prov tag);

// How the module was built. Tensor keeps its two factors alive (the
// splitting machinery needs them); left_slots says how many of the group's
// generator slots came from the left factor.
struct Provenance {
  Prov tag = Prov::Custom;
  std::vector<std::shared_ptr<const GModule>> parents;
  uint32_t left_slots = 0;
  std::vector<uint64_t> twists;  // TwistedTensor only
  std::vector<uint32_t> perm;    // TwistedTensor only
};

// F_q[G]-module: an action of the enumerated group on F_q^k, given on
// generators. Construction tabulates the action of every element along the
// BFS tree and then re-checks every Cayley edge, so a surviving GModule is a
// certified homomorphism (throws NotAHomomorphism otherwise).
class GModule {
 public:
  GModule(GroupRef G, uint32_t k, std::vector<Mat> gen_action, Provenance prov = {});

  const GroupRef& group_ptr() const { return G_; }
  const MatrixGroup& group() const { return *G_; }
  const FieldRef& field() const { return G_->field(); }
  uint32_t dim() const { return k_; }
  const Provenance& prov() const { return prov_; }

  const Mat& act_gen(uint32_t s) const { return table_[G_->edge(0, s)]; }
  const Mat& act(uint32_t e) const { return table_[e]; }
  Vec apply(uint32_t e, const Vec& v) const { return mat_vec(table_[e], v); }

 private:
  GroupRef G_;
  uint32_t k_;
  std::vector<Mat> table_;  // action per element, insertion order
  Provenance prov_;
};

GModule natural_module(GroupRef G);
GModule trivial_module(GroupRef G, uint32_t k = 1);

// Central-product tensor: builds the group generated by act_A(s) (x) I and
// I (x) act_B(s) inside GL(dim A * dim B) and returns it acting naturally on
// the tensor space. Scalar identifications between the factors happen on
// their own through element dedup. Factors may live over different groups
// (sharing only the field); both are retained as provenance.
GModule tensor_module(const GModule& A, const GModule& B);

// Diagonal twisted tensor over one common group: g acts as
// P_perm . (x)_i frobenius^{twists[i]}(act_i(g)). The candidate map is
// certified on every Cayley edge; failure (possible whenever perm is not the
// identity) throws BadTwist. Factor dims must agree.
GModule twisted_tensor_module(const std::vector<GModule>& factors,
                              const std::vector<uint64_t>& twists,
                              const std::vector<uint32_t>& perm);

// Both summands must live over the same group object.
GModule direct_sum(const GModule& A, const GModule& B);
GModule dual_module(const GModule& M);
// Entrywise field automorphism x -> x^(p^j) applied to the action.
GModule frobenius_twist(const GModule& M, uint64_t j);
// H must be a subgroup of M's group made of matrices M's group contains.
GModule restrict_module(const GModule& M, GroupRef H);
// W must be invariant; action is expressed in W's canonical basis.
GModule sub_module(const GModule& M, const Subspace& W);
// MH lives over a subgroup H <= G; result has dimension dim(MH) * [G:H],
// with blocks indexed by the least-element coset transversal.
GModule induced_module(const GModule& MH, GroupRef G);

// V^H for a subgroup H of M's group (the whole group in the 1-arg form).
Subspace fixed_subspace(const GModule& M, const MatrixGroup& H);
Subspace fixed_subspace(const GModule& M);

// Smallest subspace containing the seeds and closed under all ops.
Subspace spin_under(const FieldRef& F, uint32_t k, const std::vector<Mat>& ops,
                    const std::vector<Vec>& seeds);
Subspace spin(const GModule& M, const std::vector<Vec>& seeds);
Subspace spin(const GModule& M, const Vec& v);  // throws ZeroVector

enum class IrredStatus { Irreducible, Reducible, Inconclusive };

struct IrredResult {
  IrredStatus status = IrredStatus::Inconclusive;
  // proper nonzero invariant subspace, present iff Reducible
  std::optional<Subspace> witness;
};

// Norton-style test with seeded random algebra elements, falling back to an
// exhaustive scan over lines when q^k <= kLineScanCap. Reducibility witnesses
// are re-verified for invariance before being returned.
IrredResult is_irreducible(const GModule& M);

// True iff M is a direct sum of irreducibles. Instant for p not dividing |G|;
// otherwise recurses through invariant complements (computed as equivariant
// projections). Throws Inconclusive if the irreducibility engine gives up.
bool is_semisimple(const GModule& M);

// Element indices acting as the identity (always contains 0).
std::vector<uint32_t> rep_kernel(const GModule& M);
bool is_faithful(const GModule& M);

}  // namespace h1f
