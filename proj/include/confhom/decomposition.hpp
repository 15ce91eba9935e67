#pragma once

// Product decomposition of C((M,M0) x R; X1 v ... v Xr) over basic words
// (Hilton-Milnor), checked as an identity of degreewise Poincare series.

#include "confhom/loop_homology.hpp"
#include "confhom/types.hpp"

#include <optional>
#include <vector>

namespace confhom {

struct BasicWord {
  std::vector<int> multiplicity;  // a_i = occurrences of letter i
  int length = 0;
  Integer count;  // number of basic words with this multiplicity
};

/// Basic-word counts by multiplicity vector for all lengths 1..max_length,
/// in graded lexicographic order. Zero counts are omitted.
std::vector<BasicWord> basic_words(int letters, int max_length);

/// Reduced Betti numbers of the smash product X1^(a1) ^ ... ^ Xr^(ar).
GradedBetti smash_betti(const std::vector<GradedBetti>& spaces,
                        const std::vector<int>& multiplicity);

struct HiltonMilnorSpec {
  int m_dim = 0;
  GradedBetti rel_betti;
  std::vector<GradedBetti> x_list;
  FieldChar field = FieldChar::two();
  bool orientable = false;  // required for characteristic 0
  int max_degree = 0;
};

struct HiltonMilnorReport {
  bool passed = false;
  std::vector<Integer> lhs;  // degreewise, 0..D
  std::vector<Integer> rhs;
  std::size_t words_used = 0;
  struct Mismatch {
    int degree;
    Integer lhs;
    Integer rhs;
  };
  std::optional<Mismatch> first_mismatch;
};

/// Compares the wedge side against the product over basic words w of the
/// configuration spaces on (M_w, M0_w) with dim M_w = l(w) dim M and
/// relative homology shifted up by (l(w)-1) dim M, labels w(X1,...,Xr).
HiltonMilnorReport hilton_milnor_check(const HiltonMilnorSpec& spec);

}  // namespace confhom
