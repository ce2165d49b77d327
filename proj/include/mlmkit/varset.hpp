#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace mlmkit {

// A set of variable indices, the key of every multilinear table.
// Indices below 64 live in one inline word; larger universes spill into
// heap words. The representation is normalized (no trailing zero words),
// so equality and hashing are word-wise.
class VarSet {
 public:
  VarSet() = default;

  static VarSet single(int i) {
    VarSet s;
    s.set(i);
    return s;
  }

  bool empty() const { return low_ == 0 && high_.empty(); }

  int count() const {
    int c = std::popcount(low_);
    for (std::uint64_t w : high_) c += std::popcount(w);
    return c;
  }

  bool test(int i) const {
    if (i < 64) return (low_ >> i) & 1u;
    const std::size_t w = static_cast<std::size_t>(i) / 64 - 1;
    if (w >= high_.size()) return false;
    return (high_[w] >> (i % 64)) & 1u;
  }

  void set(int i) {
    if (i < 64) {
      low_ |= std::uint64_t{1} << i;
      return;
    }
    const std::size_t w = static_cast<std::size_t>(i) / 64 - 1;
    if (w >= high_.size()) high_.resize(w + 1, 0);
    high_[w] |= std::uint64_t{1} << (i % 64);
  }

  bool disjoint_with(const VarSet& o) const {
    if (low_ & o.low_) return false;
    const std::size_t k = std::min(high_.size(), o.high_.size());
    for (std::size_t w = 0; w < k; ++w)
      if (high_[w] & o.high_[w]) return false;
    return true;
  }

  bool intersects(const VarSet& o) const { return !disjoint_with(o); }

  bool subset_of(const VarSet& o) const {
    if (low_ & ~o.low_) return false;
    if (high_.size() > o.high_.size()) return false;  // normalized
    for (std::size_t w = 0; w < high_.size(); ++w)
      if (high_[w] & ~o.high_[w]) return false;
    return true;
  }

  VarSet union_with(const VarSet& o) const {
    VarSet r;
    r.low_ = low_ | o.low_;
    const VarSet& big = high_.size() >= o.high_.size() ? *this : o;
    const VarSet& small = high_.size() >= o.high_.size() ? o : *this;
    r.high_ = big.high_;
    for (std::size_t w = 0; w < small.high_.size(); ++w) r.high_[w] |= small.high_[w];
    return r;
  }

  // Set difference; keeps the normalized form.
  VarSet minus(const VarSet& o) const {
    VarSet r;
    r.low_ = low_ & ~o.low_;
    r.high_ = high_;
    const std::size_t k = std::min(high_.size(), o.high_.size());
    for (std::size_t w = 0; w < k; ++w) r.high_[w] &= ~o.high_[w];
    while (!r.high_.empty() && r.high_.back() == 0) r.high_.pop_back();
    return r;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    append_members(low_, 0, out);
    for (std::size_t w = 0; w < high_.size(); ++w)
      append_members(high_[w], 64 * (static_cast<int>(w) + 1), out);
    return out;
  }

  int max_index() const {  // -1 when empty
    if (!high_.empty())
      return 64 * static_cast<int>(high_.size()) + 63 -
             std::countl_zero(high_.back());
    if (low_ == 0) return -1;
    return 63 - std::countl_zero(low_);
  }

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.low_ == b.low_ && a.high_ == b.high_;
  }
  friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

  // Order by cardinality, then lexicographically on the ascending member
  // list (for equal-size sets that is: the set holding the smallest
  // non-shared index comes first).
  static bool card_lex_less(const VarSet& a, const VarSet& b) {
    const int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    if (std::uint64_t d = a.low_ ^ b.low_; d != 0)
      return a.low_ & (d & -d);
    const std::size_t k = std::max(a.high_.size(), b.high_.size());
    for (std::size_t w = 0; w < k; ++w) {
      const std::uint64_t wa = w < a.high_.size() ? a.high_[w] : 0;
      const std::uint64_t wb = w < b.high_.size() ? b.high_[w] : 0;
      if (std::uint64_t d = wa ^ wb; d != 0) return wa & (d & -d);
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = mix(low_);
    for (std::uint64_t w : high_) h = mix(h ^ mix(w));
    return static_cast<std::size_t>(h);
  }

 private:
  static void append_members(std::uint64_t word, int base, std::vector<int>& out) {
    while (word) {
      out.push_back(base + std::countr_zero(word));
      word &= word - 1;
    }
  }

  static std::uint64_t mix(std::uint64_t x) {  // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::uint64_t low_ = 0;
  std::vector<std::uint64_t> high_;
};

struct VarSetHash {
  std::size_t operator()(const VarSet& s) const { return s.hash(); }
};

}  // namespace mlmkit
