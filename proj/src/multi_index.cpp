#include "barron/multi_index.hpp"

#include <cmath>
#include <cstdlib>

#include "barron/errors.hpp"

namespace barron {

MultiIndex MultiIndex::from_pairs(const std::vector<std::pair<int, int>>& pv) {
  MultiIndex k;
  for (const auto& [pos, val] : pv) k.set(pos, val);
  return k;
}

void MultiIndex::set(int pos, int value) {
  if (pos < 1) throw validation_error("multi-index positions are 1-based");
  if (value == 0)
    entries_.erase(pos);
  else
    entries_[pos] = value;
}

int MultiIndex::at(int pos) const {
  auto it = entries_.find(pos);
  return it == entries_.end() ? 0 : it->second;
}

int MultiIndex::l1_norm() const {
  int s = 0;
  for (const auto& [pos, val] : entries_) s += std::abs(val);
  return s;
}

int MultiIndex::max_support() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex out = *this;
  for (const auto& [pos, val] : o.entries_) out.set(pos, out.at(pos) + val);
  return out;
}

MultiIndex MultiIndex::operator-() const {
  MultiIndex out;
  for (const auto& [pos, val] : entries_) out.set(pos, -val);
  return out;
}

nlohmann::json MultiIndex::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [pos, val] : entries_) arr.push_back({pos, val});
  return arr;
}

std::string MultiIndex::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [pos, val] : entries_) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(pos) + ":" + std::to_string(val);
  }
  return s + "}";
}

std::vector<MultiIndex> enumerate_indices(int max_dim, int max_linf) {
  if (max_dim < 1 || max_linf < 1)
    throw validation_error("enumerate_indices: max_dim and max_linf must be >= 1");
  // value sequence 0, -1, 1, -2, 2, ... so the zero index comes first
  std::vector<int> values;
  values.push_back(0);
  for (int a = 1; a <= max_linf; ++a) {
    values.push_back(-a);
    values.push_back(a);
  }
  const std::size_t base = values.size();
  std::vector<MultiIndex> out;
  std::vector<std::size_t> digits(max_dim, 0);
  for (;;) {
    MultiIndex k;
    for (int p = 0; p < max_dim; ++p)
      if (values[digits[p]] != 0) k.set(p + 1, values[digits[p]]);
    out.push_back(std::move(k));
    // odometer with position 1 most significant
    int p = max_dim - 1;
    while (p >= 0) {
      if (++digits[p] < base) break;
      digits[p] = 0;
      --p;
    }
    if (p < 0) break;
  }
  return out;
}

std::complex<double> basis_eval(const MultiIndex& k, const CoeffVector& v) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  double phase = 0.0;
  for (const auto& [pos, val] : k.entries()) {
    if (pos > v.size())
      throw validation_error("basis_eval: multi-index support exceeds coefficient range at position " +
                             std::to_string(pos));
    phase += val * v.coeffs[pos - 1];
  }
  return std::polar(1.0, kTwoPi * phase);
}

}  // namespace barron
