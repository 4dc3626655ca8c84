#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csf {

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is lexicographic on the parts. For two partitions of the same
/// integer this is exactly the total order used to define leading partitions.
class Partition {
 public:
  Partition() = default;

  /// Takes parts that are already weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts an arbitrary sequence of positive integers into a partition.
  static Partition from_sequence(std::span<const int> values);

  /// (n) with n >= 1, or the empty partition for n == 0.
  static Partition single(int n);
  /// (k, 1^(n-k)).
  static Partition hook(int n, int m1);
  /// (1^n).
  static Partition ones(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// m_i = number of parts equal to i.
struct MultiplicityView {
  std::map<int, int> m;

  int operator[](int i) const {
    auto it = m.find(i);
    return it == m.end() ? 0 : it->second;
  }
};

/// Split at the last part greater than one.
struct BodyTail {
  Partition body;
  int tail = 0;
};

/// Lexicographic comparison of two partitions of the same integer.
/// Throws SizeMismatchError when |a| != |b|.
std::strong_ordering lex_compare(const Partition& a, const Partition& b);

/// Multiset union of two sequences, arranged weakly decreasing.
/// Throws DomainError on a non-positive entry.
Partition sort_concat(std::span<const int> a, std::span<const int> b);
Partition sort_concat(const Partition& a, const Partition& b);

bool is_hook(const Partition& p);
/// Number of 1-parts of a hook; DomainError on a non-hook.
int hook_m1(const Partition& p);

BodyTail body_tail(const Partition& p);
MultiplicityView multiplicities(const Partition& p);

/// All partitions of n in increasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// "3+3+1+1" form; the empty partition renders as "0".
std::string to_string(const Partition& p);
/// Accepts "3+3+1+1", "[3,3,1,1]", "3,3,1,1" and "(3,3,1,1)". Parts are sorted.
Partition parse_partition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace csf
