#include "hhw/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hhw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    n_ += parts_[k];
  }
}

int Partition::multiplicity(int i) const {
  if (i < 1) throw std::invalid_argument("multiplicity: i must be >= 1");
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

} // namespace hhw
