#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace relfree {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the partition of 0.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t num_parts() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// |lambda|, the sum of the parts.
  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  friend auto operator<=>(const Partition& a, const Partition& b) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

private:
  void validate() const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
      if (i && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  std::vector<int> parts_;
};

/// All partitions of n with at most max_parts parts, in lexicographically
/// decreasing order starting from (n).
inline std::vector<Partition> partitions_of(int n, std::size_t max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    if (cur.size() == max_parts) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(rec, n, n > 0 ? n : 1);
  return out;
}

}  // namespace relfree
