#include "confhom/checks.hpp"

#include "confhom/oracle.hpp"

#include <random>
#include <sstream>

namespace confhom {

std::vector<ProblemSpec> random_coherence_specs(std::uint64_t seed, int count, int max_degree) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const FieldChar fields[] = {FieldChar::zero(), FieldChar::two(), FieldChar::odd(3),
                              FieldChar::odd(5)};

  std::vector<ProblemSpec> specs;
  for (int i = 0; i < count; ++i) {
    ProblemSpec spec;
    spec.m_dim = uniform(0, 3);
    spec.n = uniform(1, 3);
    for (int q = 0; q <= spec.m_dim; ++q) {
      const int beta = uniform(0, 2);
      if (beta > 0) spec.rel_betti.add(q, beta);
    }
    if (spec.rel_betti.empty()) spec.rel_betti.add(uniform(0, spec.m_dim), 1);
    for (int d = 2; d <= 4; ++d) {
      const int x = uniform(0, 2);
      if (x > 0) spec.x_betti.add(d, x);
    }
    if (spec.x_betti.empty()) spec.x_betti.add(uniform(2, 4), 1);
    spec.field = fields[i % 4];
    spec.caps = {max_degree, max_degree / 2};
    specs.push_back(spec);
  }
  return specs;
}

std::string describe(const ProblemSpec& spec) {
  std::ostringstream os;
  os << "dim_M=" << spec.m_dim << " rel_betti=" << spec.rel_betti.to_string()
     << " n=" << spec.n << " X=" << spec.x_betti.to_string() << " field=" << spec.field.name()
     << " D=" << spec.caps.max_degree << " K=" << spec.caps.max_weight;
  return os.str();
}

CheckResult check_ab_coherence(const ProblemSpec& spec) {
  ProblemSpec b_spec = spec;
  b_spec.mode = TheoremMode::desuspended_quotients;
  b_spec.caps.max_weight = spec.caps.max_degree / 2;
  const BiSeries a = theorem_a(spec);
  const BiSeries b = theorem_b(b_spec);
  CheckResult result{"ab_coherence " + describe(spec), a == b, ""};
  if (!result.passed) {
    const auto diff = oracle::diff_report(a, b);
    const auto& row = diff.rows.front();
    std::ostringstream os;
    os << diff.rows.size() << " cells differ; first at (d=" << row.degree << ",k=" << row.weight
       << "): A=" << row.a << " B=" << row.b;
    result.detail = os.str();
  }
  return result;
}

CheckResult check_weight_one(const ProblemSpec& spec, const BiSeries& series) {
  const auto expected = weight_one_expected(spec.rel_betti, spec.x_betti, series.max_degree());
  const auto actual = series.weight_row(1);
  CheckResult result{"weight_one " + describe(spec), expected == actual, ""};
  if (!result.passed) {
    for (std::size_t d = 0; d < expected.size(); ++d) {
      if (expected[d] != actual[d]) {
        std::ostringstream os;
        os << "degree " << d << ": expected " << expected[d] << ", got " << actual[d];
        result.detail = os.str();
        break;
      }
    }
  }
  return result;
}

}  // namespace confhom
