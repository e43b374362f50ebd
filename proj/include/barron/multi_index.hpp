#pragma once

#include <complex>
#include <map>
#include <vector>

#include "json.hpp"

#include "barron/function_space.hpp"

namespace barron {

// Integer multi-index with finite support; positions are 1-based and only
// nonzero values are stored.
class MultiIndex {
 public:
  MultiIndex() = default;

  static MultiIndex from_pairs(const std::vector<std::pair<int, int>>& pv);

  void set(int pos, int value);  // value 0 erases the entry
  int at(int pos) const;         // 0 if absent

  int l1_norm() const;
  // N_k: largest position carrying a nonzero value; 0 for the empty index.
  int max_support() const;
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  const std::map<int, int>& entries() const { return entries_; }

  bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }
  bool operator<(const MultiIndex& o) const { return entries_ < o.entries_; }
  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-() const;

  nlohmann::json to_json() const;  // sorted array of [position, value]
  std::string to_string() const;   // compact "{1:2,4:-1}" form

 private:
  std::map<int, int> entries_;
};

// All k with N_k <= max_dim and every |k_i| <= max_linf, zero index first.
// Per-coordinate values are ordered 0, -1, 1, -2, 2, ... and positions are
// scanned lexicographically with position 1 most significant.
std::vector<MultiIndex> enumerate_indices(int max_dim, int max_linf);

// e_k(v) = exp(2 pi i sum k_i b_i)
std::complex<double> basis_eval(const MultiIndex& k, const CoeffVector& v);

}  // namespace barron
