#pragma once

// Truncated bigraded power series with nonnegative integer coefficients.
//
// A BiSeries is the Poincare series sum_{d,k} c(d,k) t^d u^k of a graded
// vector space that also carries a weight grading, truncated to the window
// 0 <= d <= D, 0 <= k <= K. Every operation truncates eagerly, so nothing
// outside the window is ever read or written.
//
// The kernels that dominate run time (multiply, power_factor) parallelize
// over output degree rows with OpenMP. The *_serial variants are the plain
// scatter-loop reference implementations and are kept for testing and
// benchmarking.

#include "confhom/types.hpp"

#include <span>
#include <vector>

namespace confhom {

struct SeriesEntry {
  int degree;
  int weight;
  Integer coeff;

  friend bool operator==(const SeriesEntry&, const SeriesEntry&) = default;
};

class BiSeries {
 public:
  explicit BiSeries(Caps caps);

  static BiSeries zero(Caps caps) { return BiSeries(caps); }
  static BiSeries unit(Caps caps);
  static BiSeries monomial(Caps caps, int degree, int weight, const Integer& coeff);

  /// Entries outside the caps are dropped; repeated (d,k) entries accumulate.
  static BiSeries from_entries(Caps caps, std::span<const SeriesEntry> entries);

  const Caps& caps() const { return caps_; }
  int max_degree() const { return caps_.max_degree; }
  int max_weight() const { return caps_.max_weight; }

  /// Coefficient at (d,k); throws std::out_of_range outside the caps.
  const Integer& at(int degree, int weight) const;

  /// Nonzero entries in (degree, weight) order.
  std::vector<SeriesEntry> entries() const;

  /// sum_k c(d,k) for each d.
  std::vector<Integer> degreewise() const;

  /// c(d, weight) for each d.
  std::vector<Integer> weight_row(int weight) const;

  bool is_zero() const;
  /// c(0,0) == 1, the shape of the Poincare series of a connected algebra.
  bool has_unit_constant() const;

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

  // Kernel access. Mutation is confined to the operations below; callers
  // treat finished series as values.
  Integer& mut(int degree, int weight) { return coeff_[index(degree, weight)]; }
  const Integer& raw(int degree, int weight) const { return coeff_[index(degree, weight)]; }

 private:
  std::size_t index(int degree, int weight) const {
    return static_cast<std::size_t>(degree) * static_cast<std::size_t>(caps_.max_weight + 1) +
           static_cast<std::size_t>(weight);
  }

  Caps caps_;
  std::vector<Integer> coeff_;
};

enum class FactorKind { polynomial, exterior };

BiSeries add(const BiSeries& a, const BiSeries& b);

/// Cauchy product truncated to the shared caps. Throws ConfigError on a cap mismatch.
BiSeries multiply(const BiSeries& a, const BiSeries& b);
BiSeries multiply_serial(const BiSeries& a, const BiSeries& b);

/// a^e by repeated squaring.
BiSeries power(const BiSeries& a, const Integer& exponent);

/// acc * (1 - t^d u^k)^{-c} (polynomial) or acc * (1 + t^d u^k)^c (exterior):
/// the Poincare series of acc tensored with a free graded-commutative algebra
/// on c generators of bidegree (d,k).
BiSeries power_factor(const BiSeries& acc, int degree, int weight, const Integer& count,
                      FactorKind kind);
BiSeries power_factor_serial(const BiSeries& acc, int degree, int weight,
                             const Integer& count, FactorKind kind);

/// 1/(1 - f) = sum_r f^r. Requires f(0,0) == 0.
BiSeries inverse_one_minus(const BiSeries& f);

/// Moves c(d,k) to (d - r*k, k). Throws IntegrityError if a nonzero entry
/// would land in negative degree.
BiSeries desuspend_by_weight(const BiSeries& s, int r);

/// Same coefficients in a smaller window.
BiSeries restrict_caps(const BiSeries& s, Caps caps);

/// Throws IntegrityError naming `op` if any coefficient is negative.
void check_nonnegative(const BiSeries& s, const char* op);

}  // namespace confhom
