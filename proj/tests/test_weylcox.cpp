#include "doctest.h"

#include "oracles.hpp"
#include "peterson/weylcox.hpp"

using namespace peterson;

namespace {

Subset subset_of(std::initializer_list<int> nodes1based) {
  Subset s;
  for (int n : nodes1based) s = s.with(n - 1);
  return s;
}

const std::vector<std::string> kSweep = {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"};

}  // namespace

TEST_CASE("act: simple reflection basics") {
  DynkinDiagram b2 = build_diagram("B2");
  WeightVec alpha1(2);
  alpha1.coords[0] = 1;
  CHECK(act(b2, {0}, alpha1) == Rat(-1) * alpha1);

  WeightVec w1 = fundamental_weight(b2, Subset::full(2), 0);
  CHECK(act(b2, {0}, w1) == w1 - alpha1);

  // the longest element of B2 acts as -1
  WeylWord w0 = longest_element(b2, Subset::full(2));
  REQUIRE(w0.size() == 4);
  CHECK(act(b2, w0, w1) == Rat(-1) * w1);
}

TEST_CASE("act applies right to left") {
  DynkinDiagram a2 = build_diagram("A2");
  WeightVec alpha2(2);
  alpha2.coords[1] = 1;
  // s1 s2 (alpha_2): first s2 sends alpha_2 to -alpha_2, then s1 gives -(alpha_1+alpha_2)
  CHECK(act(a2, {0, 1}, alpha2) == WeightVec({Rat(-1), Rat(-1)}));
  CHECK(element_of(a2, WeylWord{0, 1}).apply(alpha2) == WeightVec({Rat(-1), Rat(-1)}));
}

TEST_CASE("weyl_order closed formulas") {
  CHECK(weyl_order(build_diagram("B2"), Subset::full(2)) == 8);
  CHECK(weyl_order(build_diagram("B3"), subset_of({1})) == 2);
  CHECK(weyl_order(build_diagram("A4"), Subset::empty()) == 1);
  CHECK(weyl_order(build_diagram("E6"), Subset::full(6)) == 51840);
  CHECK(weyl_order(build_diagram("E7"), Subset::full(7)) == 2903040);
  CHECK(weyl_order(build_diagram("E8"), Subset::full(8)) == 696729600);
  CHECK(weyl_order(build_diagram("F4"), Subset::full(4)) == 1152);
  CHECK(weyl_order(build_diagram("G2"), Subset::full(2)) == 12);
  // disconnected subsets multiply
  DynkinDiagram a5 = build_diagram("A5");
  CHECK(weyl_order(a5, subset_of({1, 2, 4})) == 6 * 2);
}

TEST_CASE("weyl_order agrees with orbit enumeration through rank 4") {
  for (const auto& name : {"A3", "A4", "B3", "B4", "C4", "D4", "G2", "F4"}) {
    DynkinDiagram d = build_diagram(name);
    for (uint32_t m = 0; m < (uint32_t{1} << d.rank); ++m) {
      Subset I{m};
      INFO(name << " " << I.str());
      CHECK(weyl_order(d, I) == Int(oracle::orbit_weyl_order(d, I)));
    }
  }
}

TEST_CASE("longest_element") {
  DynkinDiagram b3 = build_diagram("B3");
  CHECK(longest_element(b3, subset_of({2})) == WeylWord{1});
  CHECK(longest_element(b3, subset_of({1, 2})).size() == 3);  // A2 inside B3
  DynkinDiagram b2 = build_diagram("B2");
  WeylWord w0 = longest_element(b2, Subset::full(2));
  CHECK(w0.size() == 4);
  CHECK(is_reduced(b2, w0));

  for (const auto& name : kSweep) {
    DynkinDiagram d = build_diagram(name);
    for (uint32_t m = 0; m < (uint32_t{1} << d.rank); ++m) {
      WeylWord w = longest_element(d, Subset{m});
      INFO(name << " " << Subset{m}.str());
      CHECK(is_reduced(d, w));
      CHECK(support(w) == Subset{m});
    }
  }
}

TEST_CASE("w_I moves ambient weights by the root lattice of I") {
  for (const auto& name : {"B3", "D4", "F4"}) {
    DynkinDiagram d = build_diagram(name);
    for (uint32_t m = 0; m < (uint32_t{1} << d.rank); ++m) {
      Subset I{m};
      WeylWord wi = longest_element(d, I);
      for (int a = 0; a < d.rank; ++a) {
        WeightVec w = fundamental_weight(d, Subset::full(d.rank), a);
        WeightVec diff = w - act(d, wi, w);
        for (int j = 0; j < d.rank; ++j) {
          INFO(name << " " << I.str(), a, j);
          CHECK(is_integer(diff.coords[j]));
          if (!I.contains(j)) CHECK(diff.coords[j] == 0);
        }
      }
    }
  }
}

TEST_CASE("coxeter_elements") {
  DynkinDiagram a3 = build_diagram("A3");
  CHECK(coxeter_elements(a3, subset_of({2})).size() == 1);
  CHECK(coxeter_elements(a3, Subset::full(3)).size() == 4);  // 3! words, 4 elements
  DynkinDiagram a2 = build_diagram("A2");
  auto cox = coxeter_elements(a2, Subset::full(2));
  CHECK(cox.size() == 2);

  // every representative uses each node exactly once and is reduced
  for (const auto& name : kSweep) {
    DynkinDiagram d = build_diagram(name);
    for (uint32_t m = 0; m < (uint32_t{1} << d.rank); ++m) {
      Subset I{m};
      auto elems = coxeter_elements(d, I);
      INFO(name << " " << I.str());
      CHECK(Int(elems.size()) ==
            Int(oracle::acyclic_orientations(I.card(), oracle::diagram_edges(d, I))));
      for (const auto& v : elems) {
        CHECK(v.size() == static_cast<size_t>(I.card()));
        CHECK(support(v) == I);
        CHECK(is_reduced(d, v));
      }
    }
  }
}

TEST_CASE("reduced_word_count") {
  DynkinDiagram a3 = build_diagram("A3");
  CHECK(reduced_word_count(a3, {0}) == 1);
  CHECK(reduced_word_count(a3, {0, 2}) == 2);  // s1 s3 = s3 s1
  DynkinDiagram a2 = build_diagram("A2");
  CHECK(reduced_word_count(a2, {0, 1}) == 1);
  CHECK_THROWS_AS(reduced_word_count(a2, WeylWord{0, 0}), std::domain_error);

  // braid closure agrees with exhaustive word search on small elements
  for (const auto& name : {"A3", "B3"}) {
    DynkinDiagram d = build_diagram(name);
    std::vector<WeylWord> words = {{0, 1, 0}, {0, 1, 2}, {1, 0, 2, 1}, {0, 2}, {2, 1, 2, 0}};
    for (const auto& w : words) {
      if (!is_reduced(d, w)) continue;
      auto closure = braid_closure(d, w);
      auto brute = oracle::all_reduced_words(d, w);
      INFO(name);
      CHECK(closure.size() == brute.size());
      CHECK(std::set<WeylWord>(closure.begin(), closure.end()) == brute);
    }
  }
}

TEST_CASE("reduced word count of Coxeter elements equals linear extensions") {
  for (const auto& name : kSweep) {
    DynkinDiagram d = build_diagram(name);
    for (uint32_t m = 0; m < (uint32_t{1} << d.rank); ++m) {
      Subset I{m};
      for (const auto& v : coxeter_elements(d, I)) {
        INFO(name << " " << I.str(), v);
        CHECK(reduced_word_count(d, v) ==
              Int(oracle::linear_extensions(I.card(), oracle::induced_orientation(d, v))));
      }
    }
  }
}

TEST_CASE("bruhat order") {
  DynkinDiagram a2 = build_diagram("A2");
  WeylElt e = WeylElt::identity(2);
  WeylElt s1 = element_of(a2, {0});
  WeylElt w0 = element_of(a2, {0, 1, 0});
  CHECK(bruhat_leq(a2, e, w0));
  CHECK(bruhat_leq(a2, s1, w0));
  CHECK(!bruhat_leq(a2, w0, s1));
  CHECK(bruhat_interval_below(a2, {0, 1, 0}).size() == 6);  // all of W(A2)
  CHECK(bruhat_interval_below(a2, {0, 1}).size() == 4);     // e, s1, s2, s1s2
}
