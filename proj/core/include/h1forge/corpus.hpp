#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "h1forge/catalog.hpp"
#include "h1forge/recipes.hpp"

namespace h1f {

// Construction routes beyond the plain recipe grammar. These build their
// generators directly: field scans, subfield bases, lifted entries.
enum class CorpusBuilder : uint8_t {
  Recipe,
  Monomial3,         // C_{q-1}^2 : S_3, the determinant-one monomial group
  Singer3,           // C_{q^2+q+1} : C_3, Singer normalizer (prime q only)
  SOxScalar3,        // SO_3(q) x C_d scalars, d = gcd(q-1, 3)
  Icosian2,          // 2.A_5 in SL_2, via the golden ratio in F_q
  Klein3,            // PSL_2(7) x C_d scalars in SL_3, needs a 7th root of 1
  Subfield2,         // SL_2(q_0) in SL_2(q), q = q_0^sub_r
  Subfield3,         // SL_3(q_0) (.C_3 diagonal top) in SL_3(q)
  SU3xScalar3,       // SU_3(q_0) x C_t scalars in SL_3(q_0^2)
  UnitaryMonomial3,  // C_{q+1}^2 : S_3 inside SU_3(q), over F_{q^2}
  SOUnitary3,        // SO_3(p) x C_d scalars inside SU_3(p), over F_{p^2}
};

// Cross-characteristic attribution: the simple group behind the item, used
// to test predict_h1_zero soundness against computed cohomology.
struct FamilyRef {
  FamilyTag tag;
  uint32_t t;
  uint64_t w;
};

// One catalogued instance: a construction plus the metadata that names it in
// reports (source list and item letter, primitivity class tag).
struct CorpusItem {
  std::string id;       // stable slug, e.g. "n2-c-p29m1"
  std::string list;     // "n=2lem", "M+B+L-cor", "SU_3", "tensor" or "zoo"
  std::string item;     // "(a)".."(j)", "(e.1)".."(e.9)", "" for zoo rows
  std::string aclass;   // "C1".."C9"
  uint64_t p = 0;       // ambient field F_{p^m}
  uint32_t m = 1;
  uint32_t dim = 0;
  CorpusBuilder builder = CorpusBuilder::Recipe;
  GroupSpec spec;           // used when builder == Recipe
  uint32_t sub_r = 0;       // Subfield2/3: the prime r with q = q_0^r
  bool with_top = false;    // Subfield2/3: include the degree-2/3 normalizer top
  uint32_t scalar_d = 0;    // 0 or 1: none; else adjoin the order-d scalar
  std::optional<FamilyRef> family;
};

FieldRef item_field(const CorpusItem& it);

// Explicit generators over the stated field, enumerated and order-certified.
GroupRef elaborate_item(const CorpusItem& it);
// Natural module, except Recipe items with module structure (central
// products, twisted tensors) which keep their provenance.
GModule elaborate_item_module(const CorpusItem& it);

// Display tag: the recipe tag for Recipe items, a builder-specific tag
// otherwise (e.g. "Monomial(3,29)").
std::string item_tag(const CorpusItem& it);
// Elaborable group-spec JSON document with a "meta" block naming the source
// list and item (e.g. "n=2lem" "(c)"). Builder items are emitted in explicit
// generators form.
std::string show_item(const CorpusItem& it);

// The catalogued lists for one field F_{p^m}. Only items whose stated
// congruence/parameter gates admit the field are returned; constructions the
// workbench cannot realize from published data (Valentiner-type covers,
// relative Singer tori, subfield unitary groups) are omitted.
std::vector<CorpusItem> n2_items(uint64_t p, uint32_t m);
std::vector<CorpusItem> n3_items(uint64_t p, uint32_t m);
// Content of SU_3(q), q = p^m; items live over the square field F_{p^{2m}}.
std::vector<CorpusItem> su3_items(uint64_t p, uint32_t m);
// Imprimitive / tensor / tensor-induced shapes in dimensions 4..6.
std::vector<CorpusItem> tensor_items(uint32_t n, uint64_t p, uint32_t m);
// Fixed cross-check bag: small groups (|G| <= 2000) across dimensions 2..6,
// spanning trivial, Jordan, dihedral, quaternion, monomial, SL_2(q <= 9) and
// tensor shapes.
std::vector<CorpusItem> zoo_items();

// Items for one (class filter, dimension, field); empty filter means every
// class. Unknown dimensions yield an empty list.
std::vector<CorpusItem> corpus_items(const std::string& aclass, uint32_t n,
                                     uint64_t p, uint32_t m);

}  // namespace h1f
