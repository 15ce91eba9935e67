#include "confhom/types.hpp"

#include "confhom/errors.hpp"

#include <sstream>

namespace confhom {

GradedBetti::GradedBetti(std::initializer_list<std::pair<const int, long>> init) {
  for (const auto& [degree, count] : init) add(degree, Integer(count));
}

GradedBetti GradedBetti::from_map(const std::map<int, Integer>& m) {
  GradedBetti out;
  for (const auto& [degree, count] : m) out.add(degree, count);
  return out;
}

Integer GradedBetti::at(int degree) const {
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? Integer(0) : it->second;
}

void GradedBetti::add(int degree, const Integer& count) {
  if (degree < 0) throw InputError("Betti data in negative degree " + std::to_string(degree));
  Integer next = at(degree) + count;
  if (next < 0) throw InputError("negative Betti number in degree " + std::to_string(degree));
  if (next == 0) {
    by_degree_.erase(degree);
  } else {
    by_degree_[degree] = next;
  }
}

int GradedBetti::min_degree() const { return by_degree_.begin()->first; }
int GradedBetti::max_degree() const { return by_degree_.rbegin()->first; }

Integer GradedBetti::total() const {
  Integer sum = 0;
  for (const auto& [degree, count] : by_degree_) sum += count;
  return sum;
}

std::string GradedBetti::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [degree, count] : by_degree_) {
    if (!first) os << ", ";
    os << degree << ':' << count;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace confhom
