#pragma once

#include <map>
#include <string>
#include <utility>

#include "csf/errors.hpp"
#include "csf/integer.hpp"
#include "csf/partition.hpp"

namespace csf {

/// Sparse exact expansion in a multiplicative basis indexed by partitions of n.
/// Zero coefficients are never stored.
template <class Basis>
class BasisExpansion {
 public:
  using Map = std::map<Partition, Integer>;

  BasisExpansion() = default;
  explicit BasisExpansion(int n) : n_(n) {}

  static BasisExpansion basis_element(const Partition& p) {
    BasisExpansion out(p.size());
    out.add(p, 1);
    return out;
  }

  int degree() const noexcept { return n_; }
  const Map& coeffs() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }
  std::size_t support_size() const noexcept { return coeffs_.size(); }

  Integer coefficient(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  void add(const Partition& p, const Integer& c) {
    if (p.size() != n_) {
      throw SizeMismatchError("term of size " + std::to_string(p.size()) + " added to an expansion of degree " +
                              std::to_string(n_));
    }
    if (c == 0) return;
    auto [it, fresh] = coeffs_.try_emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  BasisExpansion& operator+=(const BasisExpansion& other) {
    check_degree(other);
    for (const auto& [p, c] : other.coeffs_) add(p, c);
    return *this;
  }
  BasisExpansion& operator-=(const BasisExpansion& other) {
    check_degree(other);
    for (const auto& [p, c] : other.coeffs_) add(p, -c);
    return *this;
  }
  BasisExpansion& operator*=(const Integer& scalar) {
    if (scalar == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [p, c] : coeffs_) c *= scalar;
    return *this;
  }

  friend BasisExpansion operator+(BasisExpansion a, const BasisExpansion& b) { return a += b; }
  friend BasisExpansion operator-(BasisExpansion a, const BasisExpansion& b) { return a -= b; }
  friend bool operator==(const BasisExpansion& a, const BasisExpansion& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_degree(const BasisExpansion& other) const {
    if (other.n_ != n_) throw SizeMismatchError("expansions of different degrees combined");
  }

  int n_ = 0;
  Map coeffs_;
};

struct StarBasis {};
struct PowerSumBasis {};

/// X_G = sum c_lambda st_lambda.
using StarExpansion = BasisExpansion<StarBasis>;
/// X_G = sum c_lambda p_lambda.
using PowerSumExpansion = BasisExpansion<PowerSumBasis>;

/// Both bases are multiplicative: b_mu * b_nu = b_sort(mu . nu).
template <class Basis>
BasisExpansion<Basis> product(const BasisExpansion<Basis>& a, const BasisExpansion<Basis>& b) {
  BasisExpansion<Basis> out(a.degree() + b.degree());
  for (const auto& [pa, ca] : a.coeffs()) {
    for (const auto& [pb, cb] : b.coeffs()) out.add(sort_concat(pa, pb), ca * cb);
  }
  return out;
}

/// Multiply by b_(1)^k.
template <class Basis>
BasisExpansion<Basis> append_ones(const BasisExpansion<Basis>& x, int k) {
  if (k == 0) return x;
  Partition ones = Partition::ones(k);
  BasisExpansion<Basis> out(x.degree() + k);
  for (const auto& [p, c] : x.coeffs()) out.add(sort_concat(p, ones), c);
  return out;
}

struct LeadingTerm {
  Partition partition;
  Integer coefficient;
};

/// Lexicographically smallest partition in the support, with its coefficient.
LeadingTerm leading_term(const StarExpansion& x);

/// Exact equality of supports and coefficients.
inline bool csf_equal(const StarExpansion& a, const StarExpansion& b) { return a == b; }

/// Coefficients c_(n - m1, 1^m1) for m1 = 0..n-2.
std::vector<Integer> hook_vector(const StarExpansion& x);

/// "2*st[4] - 2*st[3,1] + st[2,2]" in lexicographically decreasing order.
std::string to_display_string(const StarExpansion& x);

}  // namespace csf
