#include "confhom/assembler.hpp"

#include "confhom/errors.hpp"

namespace confhom {

namespace {

void require_params(const std::string& name, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count) {
    throw InputError("preset " + name + " expects " + std::to_string(count) +
                     " parameter(s), got " + std::to_string(params.size()));
  }
}

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

void validate(const ProblemSpec& spec) {
  if (spec.m_dim < 0) throw InputError("dim M must be >= 0");
  if (spec.n < 1) throw InputError("n must be >= 1 (the R^n factor)");
  if (spec.caps.max_degree < 0) throw InputError("max degree must be >= 0");
  if (!spec.rel_betti.empty() &&
      (spec.rel_betti.min_degree() < 0 || spec.rel_betti.max_degree() > spec.m_dim)) {
    throw InputError("relative Betti numbers must lie in degrees 0..dim M = " +
                     std::to_string(spec.m_dim));
  }
  if (spec.mode == TheoremMode::tensor_formula) {
    if (!spec.x_betti.empty() && spec.x_betti.min_degree() < 2) {
      throw InputError(
          "the tensor-product formula requires a simply connected label space X "
          "(reduced homology in degrees >= 2); use the desuspended quotient mode");
    }
  } else if (spec.caps.max_weight < 0) {
    throw InputError("the desuspended quotient mode needs an explicit weight cap");
  }
}

BiSeries tensor_product_series(int m_dim, const GradedBetti& rel_betti, int n,
                               const GradedBetti& label, const FieldChar& field, Caps caps) {
  const int m = m_dim + n;
  BiSeries acc = BiSeries::unit(caps);
  for (const auto& [q, beta] : rel_betti.by_degree()) {
    const int j = m - q;
    // q <= dim M and n >= 1, so the Omega^{m-q} S^m X = * branch never occurs.
    if (j < 1) throw IntegrityError("loop order below 1 for q = " + std::to_string(q));
    const BiSeries factor = factor_series(suspend_betti(label, q), j, field, caps);
    acc = multiply(acc, power(factor, beta));
  }
  return acc;
}

BiSeries theorem_a(const ProblemSpec& spec) {
  ProblemSpec checked = spec;
  checked.mode = TheoremMode::tensor_formula;
  validate(checked);
  const Caps caps{spec.caps.max_degree, spec.caps.max_degree / 2};
  return tensor_product_series(spec.m_dim, spec.rel_betti, spec.n, spec.x_betti, spec.field,
                               caps);
}

BiSeries theorem_b(const ProblemSpec& spec) {
  ProblemSpec checked = spec;
  checked.mode = TheoremMode::desuspended_quotients;
  validate(checked);
  const int D = spec.caps.max_degree;
  const int K = spec.caps.max_weight;
  // Weight-k classes drop by 2k, so degrees up to D + 2K are needed.
  const Caps internal{D + 2 * K, K};
  const BiSeries suspended =
      tensor_product_series(spec.m_dim, spec.rel_betti, spec.n, suspend_betti(spec.x_betti, 2),
                            spec.field, internal);
  return restrict_caps(desuspend_by_weight(suspended, 2), spec.caps);
}

BiSeries compute(const ProblemSpec& spec) {
  return spec.mode == TheoremMode::tensor_formula ? theorem_a(spec) : theorem_b(spec);
}

std::vector<FiltrationRow> filtration_table(const BiSeries& s) {
  std::vector<FiltrationRow> rows;
  for (int k = 0; k <= s.max_weight(); ++k) rows.push_back({k, s.weight_row(k)});
  return rows;
}

std::vector<Integer> weight_one_expected(const GradedBetti& rel_betti,
                                         const GradedBetti& x_betti, int max_degree) {
  std::vector<Integer> out(static_cast<std::size_t>(max_degree + 1));
  for (const auto& [q, beta] : rel_betti.by_degree())
    for (const auto& [d, x] : x_betti.by_degree())
      if (q + d <= max_degree) out[static_cast<std::size_t>(q + d)] += beta * x;
  return out;
}

ManifoldData preset(const std::string& name, const std::vector<int>& params,
                    const FieldChar& field) {
  if (name == "point") {
    require_params(name, params, 0);
    return {0, GradedBetti{{0, 1}}};
  }
  if (params.size() != 1) require_params(name, params, 1);
  const int m = params.empty() ? 0 : params[0];
  if (m < 0) throw InputError("preset " + name + ": parameter must be >= 0");

  if (name == "sphere") {
    GradedBetti b;
    b.add(0, 1);
    b.add(m, 1);
    return {m, b};
  }
  if (name == "torus") {
    GradedBetti b;
    for (int q = 0; q <= m; ++q) b.add(q, binomial(m, q));
    return {m, b};
  }
  if (name == "surface") {
    return {2, GradedBetti{{0, 1}, {1, 2L * m}, {2, 1}}};
  }
  if (name == "disk_pair") {
    return {m, GradedBetti{{m, 1}}};
  }
  if (name == "disk") {
    return {m, GradedBetti{{0, 1}}};
  }
  if (name == "rp") {
    if (!field.is_two()) {
      throw InputError("preset rp: real projective space Betti numbers are given over F2 only");
    }
    GradedBetti b;
    for (int q = 0; q <= m; ++q) b.add(q, 1);
    return {m, b};
  }
  throw InputError("unknown manifold preset '" + name + "'");
}

}  // namespace confhom
