// Acceptance run: one line per criterion, exact equality, 10 s budget each.

#include "confhom/assembler.hpp"
#include "confhom/checks.hpp"
#include "confhom/decomposition.hpp"
#include "confhom/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace confhom;

namespace {

constexpr double kBudgetSeconds = 10.0;

struct Outcome {
  bool passed = true;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok && passed) note = what;
    passed = passed && ok;
  }
};

using Poly = std::vector<Integer>;

Poly unit_poly(int D) {
  Poly p(static_cast<std::size_t>(D + 1));
  p[0] = 1;
  return p;
}

// Number of partitions of each degree into the given parts (parts may repeat).
Poly partition_counts(const std::vector<int>& parts, int D) {
  Poly p = unit_poly(D);
  for (int part : parts)
    for (int n = part; n <= D; ++n)
      p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - part)];
  return p;
}

// Same, but each part used at most once.
Poly distinct_counts(const std::vector<int>& parts, int D) {
  Poly p = unit_poly(D);
  for (int part : parts)
    for (int n = D; n >= part; --n)
      p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - part)];
  return p;
}

Poly convolve(const Poly& a, const Poly& b) {
  Poly c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::string where(const std::string& label, const std::vector<Integer>& a,
                  const std::vector<Integer>& b) {
  const auto diff = oracle::diff_degreewise(a, b);
  if (diff.empty()) return label;
  std::ostringstream os;
  os << label << ": degree " << diff.rows[0].degree << " engine " << diff.rows[0].a
     << " oracle " << diff.rows[0].b;
  return os.str();
}

const FieldChar kAllFields[] = {FieldChar::zero(), FieldChar::two(), FieldChar::odd(3),
                                FieldChar::odd(5)};

std::vector<ProblemSpec> suite7_specs() { return random_coherence_specs(20240611, 20, 30); }

ProblemSpec braid_spec() {
  ProblemSpec s;
  s.m_dim = 1;
  s.rel_betti = GradedBetti{{0, 1}};
  s.n = 1;
  s.x_betti = GradedBetti{{0, 1}};
  s.field = FieldChar::two();
  s.caps = {3, 3};
  s.mode = TheoremMode::desuspended_quotients;
  return s;
}

Outcome james_law() {
  Outcome o;
  const Caps caps{60, 60};
  for (int d : {1, 2, 3, 5}) {
    const auto catalog = oracle::classical_series("james", {d}, caps);
    for (const FieldChar& f : kAllFields)
      o.expect(factor_series(GradedBetti{{d, 1}}, 1, f, caps) == *catalog.bigraded,
               "d=" + std::to_string(d) + " field " + f.name());
  }
  return o;
}

Outcome omega2_s3_mod2() {
  Outcome o;
  const int D = 50;
  const auto engine = factor_series(GradedBetti{{1, 1}}, 2, FieldChar::two(), {D, D});
  const Poly expected = partition_counts({1, 3, 7, 15, 31}, D);
  o.expect(engine.degreewise() == expected, where("partitions", engine.degreewise(), expected));
  return o;
}

Outcome omega2_s3_modp() {
  Outcome o;
  for (int p : {3, 5}) {
    const int D = 2 * p * p + 2;
    std::vector<int> ext, poly;
    for (int pk = 1; 2 * pk - 1 <= D; pk *= p) ext.push_back(2 * pk - 1);
    for (int pk = p; 2 * pk - 2 <= D; pk *= p) poly.push_back(2 * pk - 2);
    const Poly expected = convolve(distinct_counts(ext, D), partition_counts(poly, D));
    const auto engine = factor_series(GradedBetti{{1, 1}}, 2, FieldChar::odd(p), {D, D});
    o.expect(engine.degreewise() == expected,
             where("p=" + std::to_string(p), engine.degreewise(), expected));
  }
  return o;
}

Outcome rational_spheres() {
  Outcome o;
  const int D = 40;
  const Caps caps{D, D};
  const FieldChar q = FieldChar::zero();
  auto check = [&](const std::string& label, const BiSeries& s, const Poly& expected) {
    o.expect(s.degreewise() == expected, where(label, s.degreewise(), expected));
  };
  for (int k = 1; k <= 3; ++k) {
    const std::string ks = " k=" + std::to_string(k);
    check("Omega S^{2k+1}" + ks, factor_series(GradedBetti{{2 * k, 1}}, 1, q, caps),
          partition_counts({2 * k}, D));
    check("Omega S^{2k}" + ks, factor_series(GradedBetti{{2 * k - 1, 1}}, 1, q, caps),
          convolve(distinct_counts({2 * k - 1}, D), partition_counts({4 * k - 2}, D)));
    check("Omega^2 S^{2k+1}" + ks, factor_series(GradedBetti{{2 * k - 1, 1}}, 2, q, caps),
          distinct_counts({2 * k - 1}, D));
    if (k >= 2) {  // k = 1 would need a degree-0 label
      check("Omega^2 S^{2k}" + ks, factor_series(GradedBetti{{2 * k - 2, 1}}, 2, q, caps),
            convolve(partition_counts({2 * k - 2}, D), distinct_counts({4 * k - 3}, D)));
    }
  }
  return o;
}

Outcome even_sphere_split() {
  Outcome o;
  const int D = 40;
  const Caps caps{D, D};
  for (const FieldChar& f : {FieldChar::two(), FieldChar::odd(3)})
    for (int k : {2, 3}) {
      const auto lhs = factor_series(GradedBetti{{2 * k - 2, 1}}, 2, f, caps).degreewise();
      const auto james = factor_series(GradedBetti{{2 * k - 2, 1}}, 1, f, caps).degreewise();
      const auto top = factor_series(GradedBetti{{4 * k - 3, 1}}, 2, f, caps).degreewise();
      const Poly rhs = convolve(james, top);
      const std::string label = f.name() + " k=" + std::to_string(k);
      o.expect(lhs == rhs, where(label, lhs, rhs));
      const auto catalog =
          oracle::classical_series("even_sphere_split", {k, f.characteristic()}, caps);
      o.expect(lhs == catalog.by_degree, where(label + " catalog", lhs, catalog.by_degree));
    }
  return o;
}

Outcome stunted_weight2() {
  Outcome o;
  const int D = 30;
  for (int j = 2; j <= 6; ++j)
    for (int d = 1; d <= 4; ++d) {
      const auto row = factor_series(GradedBetti{{d, 1}}, j, FieldChar::two(), {D, D / 2})
                           .weight_row(2);
      Poly expected(static_cast<std::size_t>(D + 1));
      for (int e = 2 * d; e <= 2 * d + j - 1; ++e) expected[static_cast<std::size_t>(e)] = 1;
      o.expect(row == expected,
               where("j=" + std::to_string(j) + " d=" + std::to_string(d), row, expected));
    }
  return o;
}

Outcome ab_coherence() {
  Outcome o;
  const auto specs = suite7_specs();
  bool fields[6] = {};
  for (const auto& spec : specs) {
    const CheckResult r = check_ab_coherence(spec);
    o.expect(r.passed, r.detail);
    fields[spec.field.is_zero() ? 0 : spec.field.is_two() ? 1 : 2] = true;
  }
  o.expect(specs.size() == 20, "expected 20 specs");
  o.expect(fields[0] && fields[1] && fields[2], "not every characteristic was covered");
  return o;
}

Outcome hilton_milnor() {
  Outcome o;
  auto run = [&](const std::string& label, int m_dim, GradedBetti rel,
                 std::vector<GradedBetti> xs) {
    HiltonMilnorSpec s;
    s.m_dim = m_dim;
    s.rel_betti = std::move(rel);
    s.x_list = std::move(xs);
    s.field = FieldChar::two();
    s.max_degree = 20;
    const auto r = hilton_milnor_check(s);
    o.expect(r.passed, where(label, r.lhs, r.rhs));
  };
  run("M=I, S^2 v S^3", 1, GradedBetti{{0, 1}}, {GradedBetti{{2, 1}}, GradedBetti{{3, 1}}});
  run("M=S^1, S^2 v S^2", 1, GradedBetti{{0, 1}, {1, 1}},
      {GradedBetti{{2, 1}}, GradedBetti{{2, 1}}});
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const Caps caps{20, 20};
  for (const FieldChar& f : {FieldChar::two(), FieldChar::odd(3)})
    for (int j : {2, 3})
      for (const GradedBetti& y :
           {GradedBetti{{1, 1}}, GradedBetti{{2, 1}}, GradedBetti{{1, 1}, {2, 1}}}) {
        const auto e = oracle::enumerate_generators(y, j, f, caps);
        const auto engine = generator_census(atom_census(y, j, f, caps), j, f, caps);
        o.expect(oracle::census_of(e, caps) == engine,
                 f.name() + " j=" + std::to_string(j) + " y=" + y.to_string());
        for (const auto& g : e.generators)
          o.expect(oracle::recompute(g, e.letter_degrees, j) == std::make_pair(g.degree, g.weight),
                   "descriptor " + oracle::to_string(g));
      }
  return o;
}

Outcome braid_rows() {
  Outcome o;
  const BiSeries s = theorem_b(braid_spec());
  const std::vector<std::vector<long>> rows = {{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 0},
                                               {1, 1, 0, 0}};
  for (int k = 0; k <= 3; ++k) {
    Poly expected;
    for (long v : rows[static_cast<std::size_t>(k)]) expected.push_back(v);
    o.expect(s.weight_row(k) == expected,
             where("k=" + std::to_string(k), s.weight_row(k), expected));
  }
  return o;
}

Outcome weight_one() {
  Outcome o;
  for (auto spec : suite7_specs()) {
    spec.mode = TheoremMode::tensor_formula;
    const CheckResult a = check_weight_one(spec, theorem_a(spec));
    o.expect(a.passed, "tensor formula: " + a.detail);
    spec.mode = TheoremMode::desuspended_quotients;
    spec.caps.max_weight = spec.caps.max_degree / 2;
    const CheckResult b = check_weight_one(spec, theorem_b(spec));
    o.expect(b.passed, "quotients: " + b.detail);
  }
  const ProblemSpec braid = braid_spec();
  const CheckResult r = check_weight_one(braid, theorem_b(braid));
  o.expect(r.passed, "braid: " + r.detail);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "James law for Omega Sigma S^d, every characteristic, D=60", james_law},
      {2, "Omega^2 S^3 mod 2 against partition counts, D=50", omega2_s3_mod2},
      {3, "Omega^2 S^3 mod p for p=3,5 against the closed form", omega2_s3_modp},
      {4, "rational loop spaces of spheres, D=40", rational_spheres},
      {5, "even-sphere splitting mod 2 and mod 3, D=40", even_sphere_split},
      {6, "stunted weight-2 slice, j=2..6, d=1..4, D=30", stunted_weight2},
      {7, "A/B coherence on 20 seeded specs, D=30", ab_coherence},
      {8, "Hilton-Milnor product identity, D=20", hilton_milnor},
      {9, "brute-force generators agree with the census, D=20", oracle_equivalence},
      {10, "braid group rows for k <= 3", braid_rows},
      {11, "weight-1 slice on the specs of criteria 7 and 10", weight_one},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= kBudgetSeconds) o.expect(false, "over the time budget");
    std::printf("[%s] criterion %2d: %s (%.3f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.id,
                c.title, seconds, o.passed ? "" : " -- ", o.passed ? "" : o.note.c_str());
    if (!o.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
