#pragma once

#include <vector>

namespace hhw {

/// Integer partition with parts in weakly decreasing order.
class Partition {
public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// p_i(lambda): the number of parts equal to i (i >= 1).
  int multiplicity(int i) const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

} // namespace hhw
