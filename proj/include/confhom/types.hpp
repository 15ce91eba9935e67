#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace confhom {

using Integer = mpz_class;

/// Truncation window: homological degree 0..max_degree, weight 0..max_weight.
struct Caps {
  int max_degree = 0;
  int max_weight = 0;

  friend bool operator==(const Caps&, const Caps&) = default;
};

/// Betti numbers by degree. Zero entries are never stored.
class GradedBetti {
 public:
  GradedBetti() = default;
  GradedBetti(std::initializer_list<std::pair<const int, long>> init);

  static GradedBetti from_map(const std::map<int, Integer>& m);

  const std::map<int, Integer>& by_degree() const { return by_degree_; }
  Integer at(int degree) const;
  void add(int degree, const Integer& count);

  bool empty() const { return by_degree_.empty(); }
  int min_degree() const;  // requires !empty()
  int max_degree() const;  // requires !empty()
  Integer total() const;

  std::string to_string() const;

  friend bool operator==(const GradedBetti&, const GradedBetti&) = default;

 private:
  std::map<int, Integer> by_degree_;
};

}  // namespace confhom
