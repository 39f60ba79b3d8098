#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vok {

// Vectors over the two-element field, fixed length <= 32.  Lengths in use:
// 8/9 (A8 mod 2), 24 (A8^3 mod 2).  Addition is XOR on the bit mask.
struct F2Vec {
  uint32_t bits = 0;
  int len = 0;

  bool get(int i) const { return (bits >> i) & 1u; }
  void set(int i, bool v) {
    if (v) bits |= (1u << i); else bits &= ~(1u << i);
  }
  F2Vec operator+(const F2Vec& o) const {
    if (len != o.len) throw std::invalid_argument("f2: mixed lengths");
    return F2Vec{bits ^ o.bits, len};
  }
  bool operator==(const F2Vec& o) const { return bits == o.bits && len == o.len; }
};

// Row-reduced basis of a span in F2^len.  Rows are kept with distinct
// leading (lowest set) bits, which makes reduction idempotent and the
// membership test exact.
class F2Basis {
 public:
  explicit F2Basis(int len) : len_(len) {}

  // Returns true if v enlarged the span.
  bool add(F2Vec v) {
    if (v.len != len_) throw std::invalid_argument("f2: mixed lengths");
    uint32_t r = reduce_bits(v.bits);
    if (r == 0) return false;
    rows_.push_back(r);
    normalize();
    return true;
  }

  bool contains(F2Vec v) const {
    if (v.len != len_) throw std::invalid_argument("f2: mixed lengths");
    return reduce_bits(v.bits) == 0;
  }

  int dimension() const { return static_cast<int>(rows_.size()); }
  int length() const { return len_; }

  std::vector<F2Vec> basis() const {
    std::vector<F2Vec> out;
    for (uint32_t r : rows_) out.push_back(F2Vec{r, len_});
    return out;
  }

  // Every element of the span, 2^dim of them, deterministic order.
  std::vector<F2Vec> span() const {
    std::vector<F2Vec> out;
    size_t n = rows_.size();
    for (uint32_t m = 0; m < (1u << n); ++m) {
      uint32_t acc = 0;
      for (size_t i = 0; i < n; ++i)
        if ((m >> i) & 1u) acc ^= rows_[i];
      out.push_back(F2Vec{acc, len_});
    }
    return out;
  }

 private:
  uint32_t reduce_bits(uint32_t b) const {
    for (uint32_t r : rows_) {
      uint32_t lead = r & ~(r - 1);
      if (b & lead) b ^= r;
    }
    return b;
  }
  void normalize() {
    // full row reduction: each row's lead bit cleared from all others
    for (size_t i = 0; i < rows_.size(); ++i) {
      uint32_t lead = rows_[i] & ~(rows_[i] - 1);
      for (size_t j = 0; j < rows_.size(); ++j)
        if (j != i && (rows_[j] & lead)) rows_[j] ^= rows_[i];
    }
    std::sort(rows_.begin(), rows_.end());
  }

  int len_;
  std::vector<uint32_t> rows_;
};

}  // namespace vok
