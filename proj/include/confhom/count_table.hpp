#pragma once

#include "confhom/errors.hpp"
#include "confhom/types.hpp"

#include <map>
#include <string>
#include <utility>

namespace confhom {

/// Sparse nonnegative counts indexed by (degree, weight). The tag keeps the
/// different roles (Lie atoms, algebra generators, ...) from mixing.
template <class Tag>
class CountTable {
 public:
  using Key = std::pair<int, int>;

  CountTable() = default;
  explicit CountTable(Caps caps) : caps_(caps) {}

  const Caps& caps() const { return caps_; }
  const std::map<Key, Integer>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Integer at(int degree, int weight) const {
    auto it = entries_.find({degree, weight});
    return it == entries_.end() ? Integer(0) : it->second;
  }

  void add(int degree, int weight, const Integer& count) {
    Integer next = at(degree, weight) + count;
    if (next < 0) {
      throw IntegrityError("negative count at (" + std::to_string(degree) + "," +
                           std::to_string(weight) + ")");
    }
    if (next == 0) {
      entries_.erase({degree, weight});
    } else {
      entries_[{degree, weight}] = next;
    }
  }

  Integer total() const {
    Integer sum = 0;
    for (const auto& [key, count] : entries_) sum += count;
    return sum;
  }

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  Caps caps_;
  std::map<Key, Integer> entries_;
};

struct DegreeLengthTag {};
struct AtomTag {};
struct GeneratorTag {};

/// (degree, bracket length) -> number of basic products.
using DegreeWeightTable = CountTable<DegreeLengthTag>;
/// (actual degree, bracket length) -> number of basic bracket words.
using AtomTable = CountTable<AtomTag>;
/// (degree, filtration weight) -> number of free-algebra generators.
using GeneratorCensus = CountTable<GeneratorTag>;

}  // namespace confhom
