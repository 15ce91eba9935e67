#pragma once

// Weight-filtered Poincare series of H_*(Omega^j Sigma^j Y; F) for a
// connected Y, given only the reduced Betti numbers of Y.
//
// For j >= 2 the homology is the free commutative algebra on admissible
// Dyer-Lashof words applied to basic Browder-bracket products. The weight of
// a generator is its configuration length: (bracket length) * p^(number of
// operations), with p = 2 in characteristic 2.

#include "confhom/count_table.hpp"
#include "confhom/series.hpp"
#include "confhom/types.hpp"
#include "confhom/witt.hpp"

#include <string>

namespace confhom {

class FieldChar {
 public:
  static FieldChar zero() { return FieldChar(0); }
  static FieldChar two() { return FieldChar(2); }
  /// Throws InputError unless p is an odd prime.
  static FieldChar odd(int p);

  /// 0, 2, or the odd prime.
  int characteristic() const { return p_; }
  bool is_zero() const { return p_ == 0; }
  bool is_two() const { return p_ == 2; }
  bool is_odd() const { return p_ > 2; }

  /// Sign convention for Browder brackets: plain in characteristic 2, super otherwise.
  LieSign bracket_sign() const { return is_two() ? LieSign::plain : LieSign::super; }

  /// "Q", "F2" or "Fp:<p>".
  std::string name() const;

  friend bool operator==(const FieldChar&, const FieldChar&) = default;

 private:
  explicit FieldChar(int p) : p_(p) {}
  int p_;
};

/// Reduced Betti numbers of Sigma^q Y.
GradedBetti suspend_betti(const GradedBetti& y, int q);

/// Basic products for the degree-(j-1) Browder bracket on H~_*(Y), j >= 2.
/// Degrees in the result are actual degrees in Omega^j Sigma^j Y; caps bound
/// actual degree and bracket length.
AtomTable atom_census(const GradedBetti& y, int j, const FieldChar& field, Caps caps);

/// Closure of the atoms under admissible Dyer-Lashof words (lower indices
/// 1 <= b <= j-1, non-increasing in application order; at odd p each unit
/// may carry a Bockstein and the next index is bounded by b - epsilon).
GeneratorCensus generator_census(const AtomTable& atoms, int j, const FieldChar& field,
                                 Caps caps);

/// Whether a generator of the given degree is polynomial or exterior.
FactorKind generator_kind(int degree, const FieldChar& field);

/// Poincare series of H_*(Omega^j Sigma^j Y) with the configuration-length weight.
///   j = 0: 1 + sum y_d t^d u
///   j = 1: tensor algebra 1/(1 - sum y_d t^d u)
///   j >= 2: free commutative algebra on generator_census.
BiSeries factor_series(const GradedBetti& y, int j, const FieldChar& field, Caps caps);

}  // namespace confhom
