#include "doctest.h"

#include <map>
#include <set>

#include "json.hpp"

#include "h1forge/corpus.hpp"
#include "h1forge/gmodule.hpp"

using namespace h1f;

namespace {

std::map<std::string, uint64_t> orders_by_item(const std::vector<CorpusItem>& items) {
  std::map<std::string, uint64_t> out;
  for (const CorpusItem& it : items) {
    REQUIRE(out.find(it.item) == out.end());
    out[it.item] = elaborate_item(it)->order();
  }
  return out;
}

void check_irreducible_faithful(const CorpusItem& it) {
  const GModule M = elaborate_item_module(it);
  CAPTURE(it.id);
  CHECK(is_irreducible(M).status == IrredStatus::Irreducible);
  CHECK(is_faithful(M));
}

}  // namespace

TEST_CASE("dimension-two list over a large prime field") {
  const auto items = n2_items(29, 1);
  const auto ord = orders_by_item(items);
  // 29 = 5 mod 8 drops (h); 29 = 29 mod 40 keeps (i); 29 = -1 mod 10 keeps (j)
  REQUIRE(ord.size() == 4);
  CHECK(ord.at("(a)") == 56);
  CHECK(ord.at("(c)") == 60);
  CHECK(ord.at("(i)") == 24);
  CHECK(ord.at("(j)") == 120);
  for (const CorpusItem& it : items) {
    CHECK(it.dim == 2);
    CHECK(it.p == 29);
    check_irreducible_faithful(it);
  }
}

TEST_CASE("dimension-two list over even and extension fields") {
  // q = 8: the split-torus normalizer is the only recipe that survives;
  // the nonsplit torus items require a prime field
  const auto even = orders_by_item(n2_items(2, 3));
  REQUIRE(even.size() == 1);
  CHECK(even.at("(b)") == 14);

  // q = 9: the split quaternion pair, the subfield group with its outer
  // half, and the icosian embedding
  const auto nine = orders_by_item(n2_items(3, 2));
  REQUIRE(nine.size() == 3);
  CHECK(nine.at("(a)") == 16);
  CHECK(nine.at("(e)") == 48);
  CHECK(nine.at("(j)") == 120);

  // the icosian item carries its composition-factor family for predictions
  for (const CorpusItem& it : n2_items(3, 2)) {
    if (it.item == "(j)") {
      REQUIRE(it.family.has_value());
      CHECK(it.family->tag == FamilyTag::PSL);
      CHECK(it.family->w == 4);
    }
  }
}

TEST_CASE("dimension-three list") {
  const auto ord = orders_by_item(n3_items(7, 1));
  REQUIRE(ord.size() == 4);
  CHECK(ord.at("(a)") == 216);   // monomial 6(q-1)^2
  CHECK(ord.at("(b)") == 171);   // Singer normalizer 3(q^2+q+1)
  CHECK(ord.at("(d)") == 216);   // extraspecial normalizer
  CHECK(ord.at("(e)") == 1008);  // SO_3(7) x C_3
  for (const CorpusItem& it : n3_items(7, 1)) check_irreducible_faithful(it);

  // 29 = 1 mod 7 realizes the 168-element simple group with scalars
  const auto big = orders_by_item(n3_items(29, 1));
  REQUIRE(big.count("(g)") == 1);
  CHECK(big.at("(g)") == 168);
  for (const CorpusItem& it : n3_items(29, 1)) {
    if (it.item == "(g)") {
      check_irreducible_faithful(it);
      REQUIRE(it.family.has_value());
      CHECK(it.family->tag == FamilyTag::PSL);
      CHECK(it.family->w == 7);
    }
  }
}

TEST_CASE("unitary list lives over the quadratic extension") {
  const auto five = su3_items(5, 1);
  const auto ord5 = orders_by_item(five);
  REQUIRE(ord5.size() == 2);
  CHECK(ord5.at("(e.1)") == 216);  // 6(q+1)^2 at q = 5
  CHECK(ord5.at("(e.5)") == 216);
  for (const CorpusItem& it : five) {
    CHECK(it.m == 2);  // ambient field F_25
    CHECK(it.dim == 3);
    check_irreducible_faithful(it);
  }

  const auto ord7 = orders_by_item(su3_items(7, 1));
  REQUIRE(ord7.size() == 2);
  CHECK(ord7.at("(e.1)") == 384);
  CHECK(ord7.at("(e.4)") == 336);
}

TEST_CASE("tensor-decomposable constructions in dimension four") {
  const auto items = tensor_items(4, 3, 1);
  const auto ord = orders_by_item(items);
  REQUIRE(ord.size() == 4);
  CHECK(ord.at("sl2xsl2") == 288);
  CHECK(ord.at("qxq") == 32);
  CHECK(ord.at("sl2xq") == 96);
  CHECK(ord.at("wr2x2") == 1152);

  // the twisted item needs a nontrivial field automorphism
  bool tw = false;
  for (const CorpusItem& it : tensor_items(4, 3, 2)) tw = tw || it.item == "tw";
  CHECK(tw);
}

TEST_CASE("fixed zoo spans the acceptance classes") {
  const auto zoo = zoo_items();
  CHECK(zoo.size() >= 50);
  std::set<std::string> ids;
  std::set<std::string> classes;
  for (const CorpusItem& it : zoo) {
    CHECK(ids.insert(it.id).second);
    classes.insert(it.aclass);
    auto G = elaborate_item(it);
    CAPTURE(it.id);
    CHECK(G->order() <= 2000);
    CHECK(!item_tag(it).empty());
  }
  for (const char* c : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9"}) {
    CAPTURE(c);
    CHECK(classes.count(c) == 1);
  }
}

TEST_CASE("item metadata serializes with the lemma header") {
  const auto items = n2_items(29, 1);
  REQUIRE(!items.empty());
  const auto j = nlohmann::ordered_json::parse(show_item(items[0]));
  CHECK(j.at("meta").at("list") == "n=2lem");
  CHECK(j.at("meta").at("item") == "(a)");
  CHECK(j.at("meta").at("class") == "C2");
  CHECK(j.at("meta").at("id") == "n2-a-p29m1");
  CHECK(j.at("field").at("p") == 29);
  CHECK(j.contains("recipe"));

  // builder-backed items emit explicit generator matrices
  for (const CorpusItem& it : n3_items(7, 1)) {
    if (it.builder == CorpusBuilder::Recipe) continue;
    const auto jb = nlohmann::ordered_json::parse(show_item(it));
    CHECK(jb.contains("generators"));
    CHECK(jb.at("meta").at("list") == "M+B+L-cor");
  }
}

TEST_CASE("corpus selection filters by class and dimension") {
  const auto all2 = corpus_items("", 2, 29, 1);
  CHECK(all2.size() == n2_items(29, 1).size());
  const auto c3only = corpus_items("C3", 2, 29, 1);
  REQUIRE(c3only.size() == 1);
  CHECK(c3only[0].item == "(c)");

  // even extension degree folds the unitary list into dimension three
  const auto merged = corpus_items("", 3, 5, 2);
  bool has_unitary = false;
  for (const CorpusItem& it : merged) {
    if (it.id.rfind("su3-", 0) == 0) {
      has_unitary = true;
      CHECK(it.m == 2);
    }
  }
  CHECK(has_unitary);

  CHECK(corpus_items("", 7, 3, 1).empty());
  CHECK(corpus_items("C9", 4, 3, 1).empty());
}
