#include "doctest.h"

#include "peterson/closedform.hpp"
#include "peterson/cohring.hpp"

using namespace peterson;

namespace {

Subset subset_of(std::initializer_list<int> nodes1based) {
  Subset s;
  for (int n : nodes1based) s = s.with(n - 1);
  return s;
}

}  // namespace

TEST_CASE("chevalley coefficients: worked examples") {
  DynkinDiagram b2 = build_diagram("B2");
  ChevalleyCoeffs c = chevalley(b2, 0, Subset::full(2));
  CHECK(c.diagonal == TPoly::monomial(4, 1));
  CHECK(c.offdiag.at(0) == 4);
  CHECK(c.offdiag.at(1) == 4);

  // the same constants for the B2-shaped subset of B3: ambient independence
  DynkinDiagram b3 = build_diagram("B3");
  ChevalleyCoeffs c2 = chevalley(b3, 1, subset_of({2, 3}));
  CHECK(c2.diagonal == TPoly::monomial(4, 1));
  CHECK(c2.offdiag.at(1) == 4);
  CHECK(c2.offdiag.at(2) == 4);

  // A_n diagonal is i(n+1-i)t
  DynkinDiagram a3 = build_diagram("A3");
  CHECK(chevalley(a3, 1, Subset::full(3)).diagonal == TPoly::monomial(4, 1));

  // zero record outside J
  ChevalleyCoeffs z = chevalley(b3, 0, subset_of({2, 3}));
  CHECK(z.diagonal.is_zero());
  CHECK(z.offdiag.empty());
}

TEST_CASE("monk coefficients: worked examples") {
  DynkinDiagram b3 = build_diagram("B3");
  MonkCoeffs m = monk(b3, 1, subset_of({1, 2}));
  CHECK(!m.bare);
  CHECK(m.diagonal == TPoly::monomial(2, 1));
  CHECK(m.up.at(2) == Rat(4, 3));

  DynkinDiagram d6 = build_diagram("D6");
  MonkCoeffs md = monk(d6, 2, subset_of({3, 4, 5}));
  CHECK(md.diagonal == TPoly::monomial(3, 1));
  CHECK(md.up.at(1) == Rat(3, 4));
  CHECK(md.up.at(5) == Rat(1, 2));
  CHECK(md.up.at(0) == 0);  // node 1 has no edge into {3,4,5}

  DynkinDiagram a2 = build_diagram("A2");
  MonkCoeffs ma = monk(a2, 0, subset_of({1}));
  CHECK(ma.diagonal == TPoly::monomial(1, 1));
  CHECK(ma.up.at(1) == Rat(1, 2));

  MonkCoeffs bare = monk(a2, 1, subset_of({1}));
  CHECK(bare.bare);
  CHECK(bare.bare_target == Subset::full(2));
}

TEST_CASE("chevalley and monk constants are nonnegative") {
  for (const auto& name : {"A4", "B4", "C4", "D4", "G2", "F4"}) {
    DynkinDiagram d = build_diagram(name);
    for (uint32_t m = 0; m < (uint32_t{1} << d.rank); ++m) {
      for (int a : Subset{m}.elements(d.rank)) {
        ChevalleyCoeffs c = chevalley(d, a, Subset{m});
        CHECK(c.diagonal.coeff(1) > 0);
        CHECK(is_integer(c.diagonal.coeff(1)));
        for (const auto& [b, v] : c.offdiag) CHECK(v >= 0);
        MonkCoeffs mk = monk(d, a, Subset{m});
        for (const auto& [g, v] : mk.up) CHECK(v >= 0);
      }
    }
  }
}

TEST_CASE("chevalley coefficients depend only on the abstract subdiagram") {
  // B2 realized as {1,2} of B2, {2,3} of B3, {3,4} of B4
  struct Emb {
    std::string amb;
    Subset I;
    int first;  // ambient node playing the B2 node 1
  };
  std::vector<Emb> embs = {{"B2", subset_of({1, 2}), 0},
                           {"B3", subset_of({2, 3}), 1},
                           {"B4", subset_of({3, 4}), 2}};
  for (int local_a = 0; local_a < 2; ++local_a) {
    std::vector<TPoly> diags;
    std::vector<std::vector<Rat>> offs;
    for (const auto& e : embs) {
      DynkinDiagram d = build_diagram(e.amb);
      ChevalleyCoeffs c = chevalley(d, e.first + local_a, e.I);
      diags.push_back(c.diagonal);
      offs.push_back({c.offdiag.at(e.first), c.offdiag.at(e.first + 1)});
    }
    for (size_t k = 1; k < embs.size(); ++k) {
      CHECK(diags[k] == diags[0]);
      CHECK(offs[k] == offs[0]);
    }
  }
}

TEST_CASE("multiplicity") {
  DynkinDiagram b2 = build_diagram("B2");
  CHECK(multiplicity(b2, {0}) == 1);
  CHECK(multiplicity(b2, {0, 1}) == 2);
  DynkinDiagram a2 = build_diagram("A2");
  CHECK(multiplicity(a2, {0, 1}) == 1);
  CHECK_THROWS_AS(multiplicity(a2, WeylWord{0, 1, 0}), std::domain_error);
}

TEST_CASE("klyachko_integral") {
  CHECK(klyachko_integral(build_diagram("B2")) == 4);
  CHECK(klyachko_integral(build_diagram("A2")) == 2);
  CHECK(klyachko_integral(build_diagram("A1")) == 1);
  CHECK(klyachko_integral(build_diagram("G2")) == 12);
}

TEST_CASE("monk_p_basis") {
  DynkinDiagram a2 = build_diagram("A2");
  std::map<uint32_t, WeylWord> choice;
  for (uint32_t m = 0; m < 4; ++m) choice[m] = coxeter_elements(a2, Subset{m}).front();

  // p_2 p_{v_{1}} = 2 p_{v_{1,2}}
  PBasisMonk pb = monk_p_basis(a2, 1, subset_of({1}), choice);
  REQUIRE(pb.coeff.size() == 1);
  CHECK(pb.coeff.at(Subset::full(2).bits) == TPoly(2));

  // diagonal rescaling consistency with the omega-basis rule and the ring
  PetersonRing ring(a2);
  for (uint32_t im = 0; im < 4; ++im) {
    Subset I{im};
    for (int a = 0; a < 2; ++a) {
      PBasisMonk rule = monk_p_basis(a2, a, I, choice);
      CohClass lhs = ring.divisor(a) * ring.p_class(choice[im]);
      CohClass rhs = ring.zero();
      for (const auto& [k, c] : rule.coeff) rhs = rhs + c * ring.p_class(choice[k]);
      INFO(I.str() << " alpha=" << a + 1);
      CHECK(lhs == rhs);
    }
  }

  std::map<uint32_t, WeylWord> bad = choice;
  bad[3] = {0, 1, 0};
  CHECK_THROWS_AS(monk_p_basis(a2, 0, subset_of({1}), bad), std::domain_error);
}

TEST_CASE("monk_p_basis cross-checked in A3") {
  DynkinDiagram a3 = build_diagram("A3");
  std::map<uint32_t, WeylWord> choice;
  for (uint32_t m = 0; m < 8; ++m) choice[m] = coxeter_elements(a3, Subset{m}).front();
  PetersonRing ring(a3);
  Subset I = subset_of({1, 3});
  PBasisMonk rule = monk_p_basis(a3, 0, I, choice);
  CohClass lhs = ring.divisor(0) * ring.p_class(choice[I.bits]);
  CohClass rhs = ring.zero();
  for (const auto& [k, c] : rule.coeff) rhs = rhs + c * ring.p_class(choice[k]);
  CHECK(lhs == rhs);
  CHECK(!rule.coeff.at(Subset::full(3).bits).is_zero());  // gamma = 2 term present
}

TEST_CASE("tables: structure constants for the classical families") {
  for (char fam : {'A', 'B', 'C', 'D'}) {
    auto rows = emit_tables(fam, 6);
    CHECK(!rows.empty());
    for (const auto& e : rows) {
      INFO(fam << e.n << " table " << e.table << " i=" << e.i << " j=" << e.j);
      if (e.asserted) CHECK(e.agree);
      if (e.table == 1) {
        CHECK(is_integer(e.general));
        CHECK(e.general > 0);
      }
    }
  }

  // spot values for well-known closed forms
  auto b = emit_tables('B', 3);
  auto find = [&](const std::vector<TableEntry>& rows, int table, int n, int i, int j) {
    for (const auto& e : rows)
      if (e.table == table && e.n == n && e.i == i && e.j == j) return e;
    throw std::logic_error("table entry not found");
  };
  CHECK(find(b, 1, 3, 3, 0).general == 6);              // B3 top node: n(n+1)/2
  CHECK(find(b, 2, 2, 1, 2).general == 4);              // the worked B2 constant
  auto a = emit_tables('A', 4);
  CHECK(find(a, 1, 4, 2, 0).general == 6);              // i(n+1-i)
  for (const auto& e : a)
    if (e.table == 3) CHECK(e.agree);                    // A-type Monk rows are exact

  CHECK_THROWS_AS(emit_tables('E', 6), std::invalid_argument);
}

TEST_CASE("tables: flagged rows are emitted, not asserted") {
  auto rows = emit_tables('B', 4);
  bool saw_flagged = false;
  for (const auto& e : rows)
    if (!e.asserted && e.closed && !e.agree) saw_flagged = true;
  // the tabulated B-type Chevalley rows beyond rank 2 do not match the naive
  // reading; they must be present and flagged rather than silently dropped
  CHECK(saw_flagged);
}
