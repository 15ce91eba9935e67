#pragma once

// Homology of labeled configuration spaces C((M,M0) x R^n; X).
//
// With m = dim M + n, H_*C((M,M0) x R^n; X) is, as a filtered module, the
// tensor product over q = 0..dim M of beta_q copies of H_*(Omega^{m-q} S^m X),
// beta_q the relative Betti numbers of (M,M0). This needs X simply connected.
// For arbitrary X the k-th filtration quotient is computed from S^2 X and
// desuspended by 2k.

#include "confhom/loop_homology.hpp"
#include "confhom/series.hpp"
#include "confhom/types.hpp"

#include <string>
#include <vector>

namespace confhom {

enum class TheoremMode { tensor_formula, desuspended_quotients };

struct ProblemSpec {
  int m_dim = 0;
  GradedBetti rel_betti;  // H_*(M, M0), degrees 0..m_dim
  int n = 1;
  GradedBetti x_betti;  // reduced homology of the label space X
  FieldChar field = FieldChar::two();
  Caps caps;
  TheoremMode mode = TheoremMode::tensor_formula;
};

/// Throws InputError naming the violated hypothesis.
void validate(const ProblemSpec& spec);

/// Tensor-product formula. Requires X simply connected (labels in degree >= 2).
/// The weight cap is derived as floor(D/2); spec.caps.max_weight is ignored.
BiSeries theorem_a(const ProblemSpec& spec);

/// Desuspended filtration quotients; any X, explicit weight cap K.
BiSeries theorem_b(const ProblemSpec& spec);

/// Dispatches on spec.mode.
BiSeries compute(const ProblemSpec& spec);

/// prod_q factor_series(Sigma^q label, m_dim + n - q)^{beta_q} without
/// checking the hypotheses of either theorem.
BiSeries tensor_product_series(int m_dim, const GradedBetti& rel_betti, int n,
                               const GradedBetti& label, const FieldChar& field, Caps caps);

struct FiltrationRow {
  int weight;
  std::vector<Integer> betti;  // by degree 0..D
};

/// One row per weight k: the Betti numbers of the k-th filtration quotient.
std::vector<FiltrationRow> filtration_table(const BiSeries& s);

/// Reduced homology of M/M0 smash X, the weight-1 part of every answer.
std::vector<Integer> weight_one_expected(const GradedBetti& rel_betti,
                                         const GradedBetti& x_betti, int max_degree);

struct ManifoldData {
  int dim;
  GradedBetti rel_betti;
};

/// Named manifold pairs: sphere(m), torus(m), surface(g), disk_pair(m),
/// disk(m), rp(m) (F2 only), point().
ManifoldData preset(const std::string& name, const std::vector<int>& params,
                    const FieldChar& field);

}  // namespace confhom
