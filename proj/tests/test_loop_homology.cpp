#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confhom/errors.hpp"
#include "confhom/loop_homology.hpp"

#include <vector>

using namespace confhom;

namespace {

struct Gen {
  int degree;
  int weight;
  bool exterior;
};

// Monomials in the given generators, counted by (degree, weight).
BiSeries monomial_count(const std::vector<Gen>& gens, Caps caps) {
  BiSeries out(caps);
  auto rec = [&](auto&& self, std::size_t i, int d, int k) -> void {
    if (i == gens.size()) {
      out.mut(d, k) += 1;
      return;
    }
    const Gen& g = gens[i];
    const int max_power = g.exterior ? 1 : caps.max_degree;
    for (int e = 0; e <= max_power; ++e) {
      const int nd = d + e * g.degree, nk = k + e * g.weight;
      if (nd > caps.max_degree || nk > caps.max_weight) break;
      self(self, i + 1, nd, nk);
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

GeneratorCensus census(Caps caps, std::initializer_list<std::tuple<int, int, int>> entries) {
  GeneratorCensus c(caps);
  for (auto [d, k, n] : entries) c.add(d, k, n);
  return c;
}

AtomTable atoms_of(Caps caps, std::initializer_list<std::tuple<int, int, int>> entries) {
  AtomTable a(caps);
  for (auto [d, k, n] : entries) a.add(d, k, n);
  return a;
}

const FieldChar kFields[] = {FieldChar::zero(), FieldChar::two(), FieldChar::odd(3),
                             FieldChar::odd(5)};

}  // namespace

TEST_CASE("FieldChar") {
  CHECK(FieldChar::odd(7).characteristic() == 7);
  CHECK(FieldChar::two().name() == "F2");
  CHECK(FieldChar::zero().name() == "Q");
  CHECK(FieldChar::odd(5).name() == "Fp:5");
  CHECK_THROWS_AS(FieldChar::odd(9), InputError);
  CHECK_THROWS_AS(FieldChar::odd(2), InputError);
  CHECK_THROWS_AS(FieldChar::odd(1), InputError);
}

TEST_CASE("suspend_betti") {
  CHECK(suspend_betti(GradedBetti{{2, 1}}, 1) == GradedBetti{{3, 1}});
  CHECK(suspend_betti(GradedBetti{{2, 1}, {3, 2}}, 0) == GradedBetti{{2, 1}, {3, 2}});
  CHECK(suspend_betti(GradedBetti{{2, 1}, {3, 2}}, 2) == GradedBetti{{4, 1}, {5, 2}});
}

TEST_CASE("atom_census") {
  const Caps caps{20, 10};
  CHECK(atom_census(GradedBetti{{1, 1}}, 2, FieldChar::two(), caps) ==
        atoms_of(caps, {{1, 1, 1}}));
  CHECK(atom_census(GradedBetti{{2, 1}}, 2, FieldChar::zero(), caps) ==
        atoms_of(caps, {{2, 1, 1}, {5, 2, 1}}));
  CHECK(atom_census(GradedBetti{{1, 1}}, 2, FieldChar::zero(), caps) ==
        atoms_of(caps, {{1, 1, 1}}));
}

TEST_CASE("atom_census: length-l atoms respect the degree lower bound") {
  const Caps caps{24, 8};
  for (const FieldChar& field : kFields)
    for (int j : {2, 3, 4}) {
      const AtomTable atoms = atom_census(GradedBetti{{2, 1}, {3, 1}}, j, field, caps);
      for (const auto& [key, count] : atoms.entries()) {
        const auto [d, l] = key;
        CHECK(d >= 2 * l + (l - 1) * (j - 1));
      }
    }
}

TEST_CASE("generator_census") {
  const Caps caps{20, 10};
  SUBCASE("char 2, one degree-1 atom, j = 2") {
    CHECK(generator_census(atoms_of(caps, {{1, 1, 1}}), 2, FieldChar::two(), caps) ==
          census(caps, {{1, 1, 1}, {3, 2, 1}, {7, 4, 1}, {15, 8, 1}}));
  }
  SUBCASE("p = 3, one degree-1 atom, j = 2") {
    CHECK(generator_census(atoms_of(caps, {{1, 1, 1}}), 2, FieldChar::odd(3), caps) ==
          census(caps, {{1, 1, 1}, {5, 3, 1}, {4, 3, 1}, {17, 9, 1}, {16, 9, 1}}));
  }
  SUBCASE("p = 3, one degree-2 atom, j = 2: parity blocks everything") {
    CHECK(generator_census(atoms_of(caps, {{2, 1, 1}}), 2, FieldChar::odd(3), caps) ==
          census(caps, {{2, 1, 1}}));
  }
  SUBCASE("char 0 keeps atoms only") {
    const AtomTable atoms = atoms_of(caps, {{2, 1, 1}, {5, 2, 1}});
    const GeneratorCensus g = generator_census(atoms, 3, FieldChar::zero(), caps);
    CHECK(g == census(caps, {{2, 1, 1}, {5, 2, 1}}));
  }
  SUBCASE("char 2, j = 3: non-increasing lower indices") {
    // Q1 x = 5, Q2 x = 6, Q2Q2 x = 14, Q1Q2 x = 13, Q1Q1 x = 11; Q2Q1 is inadmissible.
    const GeneratorCensus g =
        generator_census(atoms_of(caps, {{2, 1, 1}}), 3, FieldChar::two(), caps);
    CHECK(g == census(caps, {{2, 1, 1}, {5, 2, 1}, {6, 2, 1}, {11, 4, 1}, {13, 4, 1},
                             {14, 4, 1}}));
  }
}

TEST_CASE("generator_kind") {
  CHECK(generator_kind(3, FieldChar::two()) == FactorKind::polynomial);
  CHECK(generator_kind(4, FieldChar::two()) == FactorKind::polynomial);
  CHECK(generator_kind(3, FieldChar::zero()) == FactorKind::exterior);
  CHECK(generator_kind(4, FieldChar::odd(3)) == FactorKind::polynomial);
  CHECK(generator_kind(5, FieldChar::odd(3)) == FactorKind::exterior);
}

TEST_CASE("factor_series: closed forms") {
  SUBCASE("j = 1 on one degree-3 class") {
    const Caps caps{12, 6};
    BiSeries expected(caps);
    for (int r = 0; 3 * r <= 12; ++r) expected.mut(3 * r, r) = 1;
    CHECK(factor_series(GradedBetti{{3, 1}}, 1, FieldChar::two(), caps) == expected);
  }
  SUBCASE("j = 2, char 2, one degree-1 class") {
    const Caps caps{7, 7};
    const BiSeries s = factor_series(GradedBetti{{1, 1}}, 2, FieldChar::two(), caps);
    const std::vector<long> expected = {1, 1, 1, 2, 2, 2, 3, 4};
    for (int d = 0; d <= 7; ++d)
      CHECK(s.degreewise()[static_cast<std::size_t>(d)] == expected[static_cast<std::size_t>(d)]);
    CHECK(s == monomial_count({{1, 1, false}, {3, 2, false}, {7, 4, false}}, caps));
  }
  SUBCASE("j = 2, char 0, one degree-2 class") {
    const Caps caps{16, 8};
    CHECK(factor_series(GradedBetti{{2, 1}}, 2, FieldChar::zero(), caps) ==
          monomial_count({{2, 1, false}, {5, 2, true}}, caps));
  }
  SUBCASE("j = 2, p = 3, one degree-1 class") {
    const Caps caps{18, 9};
    CHECK(factor_series(GradedBetti{{1, 1}}, 2, FieldChar::odd(3), caps) ==
          monomial_count({{1, 1, true}, {5, 3, true}, {4, 3, false}, {17, 9, true},
                          {16, 9, false}},
                         caps));
  }
  SUBCASE("j = 0") {
    const Caps caps{6, 3};
    BiSeries expected = BiSeries::unit(caps);
    expected.mut(2, 1) = 1;
    expected.mut(4, 1) = 3;
    CHECK(factor_series(GradedBetti{{2, 1}, {4, 3}}, 0, FieldChar::odd(3), caps) == expected);
  }
}

TEST_CASE("factor_series: weight 0 and weight 1 rows") {
  const Caps caps{14, 7};
  const GradedBetti y{{1, 1}, {2, 2}, {4, 1}};
  for (const FieldChar& field : kFields)
    for (int j = 0; j <= 4; ++j) {
      const BiSeries s = factor_series(y, j, field, caps);
      for (int d = 0; d <= caps.max_degree; ++d) {
        CHECK(s.at(d, 0) == (d == 0 ? 1 : 0));
        CHECK(s.at(d, 1) == y.at(d));
      }
    }
}

TEST_CASE("factor_series: weight-2 slice in char 2 is the stunted pattern") {
  const Caps caps{30, 4};
  for (int d = 1; d <= 4; ++d)
    for (int j = 2; j <= 5; ++j) {
      const std::vector<Integer> row =
          factor_series(GradedBetti{{d, 1}}, j, FieldChar::two(), caps).weight_row(2);
      for (int e = 0; e <= caps.max_degree; ++e)
        CHECK(row[static_cast<std::size_t>(e)] == (e >= 2 * d && e <= 2 * d + j - 1 ? 1 : 0));
    }
}

TEST_CASE("factor_series: j = 1 ignores the characteristic") {
  const Caps caps{16, 8};
  const GradedBetti y{{1, 1}, {2, 1}, {3, 2}};
  const BiSeries ref = factor_series(y, 1, FieldChar::two(), caps);
  CHECK(factor_series(y, 1, FieldChar::zero(), caps) == ref);
  CHECK(factor_series(y, 1, FieldChar::odd(3), caps) == ref);
  CHECK(factor_series(y, 1, FieldChar::odd(7), caps) == ref);
}

TEST_CASE("factor_series: larger caps never change stored coefficients") {
  const GradedBetti y{{1, 1}, {3, 1}};
  for (const FieldChar& field : kFields)
    for (int j = 1; j <= 3; ++j) {
      const BiSeries small = factor_series(y, j, field, {12, 5});
      const BiSeries big = factor_series(y, j, field, {20, 9});
      CHECK(restrict_caps(big, {12, 5}) == small);
    }
}

TEST_CASE("factor_series: double suspension shifts by twice the weight") {
  const Caps caps{24, 8};
  const GradedBetti y{{1, 1}, {2, 1}};
  for (const FieldChar& field : kFields)
    for (int j = 1; j <= 4; ++j) {
      const BiSeries s = factor_series(y, j, field, caps);
      const BiSeries s2 = factor_series(suspend_betti(y, 2), j, field, caps);
      for (int d = 0; d <= caps.max_degree; ++d)
        for (int k = 0; k <= caps.max_weight; ++k) {
          const int low = d - 2 * k;
          const Integer expected = low >= 0 ? s.at(low, k) : Integer(0);
          CHECK(s2.at(d, k) == expected);
        }
    }
}
