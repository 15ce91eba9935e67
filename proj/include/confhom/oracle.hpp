#pragma once

// Independent verification path.
//
// enumerate_generators builds explicit witnesses: Hall basic commutators as
// binary trees, plus operation words found by exhaustive search and filtered
// with the upper-index admissibility rule. Nothing here goes through the
// Witt peeling or the series kernel, so a disagreement with
// generator_census points at one of the two paths.

#include "confhom/count_table.hpp"
#include "confhom/loop_homology.hpp"
#include "confhom/series.hpp"
#include "confhom/types.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace confhom::oracle {

struct BracketTree {
  int letter = -1;  // >= 0 for a leaf
  std::shared_ptr<const BracketTree> left;
  std::shared_ptr<const BracketTree> right;

  bool is_leaf() const { return letter >= 0; }
};

using TreePtr = std::shared_ptr<const BracketTree>;

struct OpUnit {
  int index;       // lower index b
  bool bockstein;  // epsilon
};

struct GeneratorDescriptor {
  TreePtr atom;
  std::vector<OpUnit> ops;  // application order: ops[0] acts first
  int degree = 0;
  int weight = 0;
  FieldChar field = FieldChar::two();
};

struct GeneratorEnumeration {
  std::vector<int> letter_degrees;  // actual degree of each letter of Y
  int j = 0;
  std::vector<GeneratorDescriptor> generators;
};

GeneratorEnumeration enumerate_generators(const GradedBetti& y, int j, const FieldChar& field,
                                          Caps caps);

int tree_length(const BracketTree& tree);
/// Actual degree of a bracket word: the bracket has degree j-1.
int tree_degree(const BracketTree& tree, const std::vector<int>& letter_degrees, int j);

/// (degree, weight) recomputed from the tree and the operation units.
std::pair<int, int> recompute(const GeneratorDescriptor& g,
                              const std::vector<int>& letter_degrees, int j);

/// e.g. "Q1 Q2 [x0,x1]" (written order, outermost operation first).
std::string to_string(const GeneratorDescriptor& g);

GeneratorCensus census_of(const GeneratorEnumeration& e, Caps caps);

struct CatalogSeries {
  std::vector<Integer> by_degree;     // 0..D
  std::optional<BiSeries> bigraded;  // when the weight is classically known
};

/// Literature closed forms: james(d); omega2_s3_mod2; omega2_s3_modp(p);
/// rational_loops_sphere(j, m) for j in {1,2}; stunted_weight2(d, j);
/// even_sphere_split(k, p) with p = 2 or an odd prime.
CatalogSeries classical_series(const std::string& name, const std::vector<int>& params,
                               Caps caps);

struct DiffRow {
  int degree;
  int weight;
  Integer a;
  Integer b;
};

struct DiffReport {
  std::vector<DiffRow> rows;
  bool empty() const { return rows.empty(); }
};

/// Sorted list of cells where a and b differ. Throws ConfigError on cap mismatch.
DiffReport diff_report(const BiSeries& a, const BiSeries& b);

/// Degreewise variant, index = degree, weight reported as -1.
DiffReport diff_degreewise(const std::vector<Integer>& a, const std::vector<Integer>& b);

}  // namespace confhom::oracle
