#include "pogcut/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pogcut/common.hpp"

namespace pogcut {

EdgeVector::EdgeVector(std::size_t len, std::initializer_list<int> bits) : EdgeVector(len) {
  for (int b : bits) set(static_cast<std::size_t>(b));
}

EdgeVector::EdgeVector(std::size_t len, std::span<const int> bits) : EdgeVector(len) {
  for (int b : bits) set(static_cast<std::size_t>(b));
}

void EdgeVector::check_len(const EdgeVector& other) const {
  if (len_ != other.len_) throw std::invalid_argument("EdgeVector: length mismatch");
}

bool EdgeVector::test(std::size_t i) const {
  if (i >= len_) throw std::out_of_range("EdgeVector::test: index out of range");
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void EdgeVector::set(std::size_t i, bool value) {
  if (i >= len_) throw std::out_of_range("EdgeVector::set: index out of range");
  std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= mask;
  else
    words_[i / 64] &= ~mask;
}

void EdgeVector::flip(std::size_t i) {
  if (i >= len_) throw std::out_of_range("EdgeVector::flip: index out of range");
  words_[i / 64] ^= std::uint64_t{1} << (i % 64);
}

std::size_t EdgeVector::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool EdgeVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> EdgeVector::lowest_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k]) return 64 * k + static_cast<std::size_t>(std::countr_zero(words_[k]));
  return std::nullopt;
}

std::vector<int> EdgeVector::set_bits() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w) {
      out.push_back(static_cast<int>(64 * k + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

std::string EdgeVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

EdgeVector& EdgeVector::operator^=(const EdgeVector& other) {
  check_len(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::strong_ordering EdgeVector::operator<=>(const EdgeVector& other) const {
  if (len_ != other.len_) return len_ <=> other.len_;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t diff = words_[k] ^ other.words_[k];
    if (diff) {
      int low = std::countr_zero(diff);
      // whoever has 0 at the first differing position is lexicographically smaller
      return ((words_[k] >> low) & 1u) ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

bool orthogonal(const EdgeVector& a, const EdgeVector& b) {
  a.check_len(b);
  std::uint64_t parity = 0;
  for (std::size_t k = 0; k < a.words_.size(); ++k)
    parity ^= std::uint64_t(std::popcount(a.words_[k] & b.words_[k])) & 1u;
  return parity == 0;
}

Gf2Subspace Gf2Subspace::full(std::size_t ambient) {
  Gf2Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    EdgeVector e(ambient);
    e.set(i);
    s.basis_.push_back(std::move(e));
  }
  return s;
}

Gf2Subspace Gf2Subspace::span(std::span<const EdgeVector> vectors, std::size_t ambient) {
  Gf2Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

EdgeVector Gf2Subspace::reduce(EdgeVector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Gf2Subspace: ambient mismatch");
  for (const auto& row : basis_) {
    auto lead = row.lowest_set();
    if (lead && v.test(*lead)) v ^= row;
  }
  return v;
}

void Gf2Subspace::insert(EdgeVector v) {
  v = reduce(std::move(v));
  auto lead = v.lowest_set();
  if (!lead) return;  // dependent
  // back-eliminate the new leading bit from existing rows, keep rows sorted by lead
  for (auto& row : basis_)
    if (row.test(*lead)) row ^= v;
  auto pos = std::lower_bound(basis_.begin(), basis_.end(), v,
                              [](const EdgeVector& a, const EdgeVector& b) {
                                return *a.lowest_set() < *b.lowest_set();
                              });
  basis_.insert(pos, std::move(v));
}

bool Gf2Subspace::contains_subspace(const Gf2Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Gf2Subspace: ambient mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const EdgeVector& v) { return contains(v); });
}

Gf2Subspace Gf2Subspace::sum(const Gf2Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Gf2Subspace: ambient mismatch");
  Gf2Subspace s = *this;
  for (const auto& v : other.basis_) s.insert(v);
  return s;
}

// Zassenhaus: eliminate rows [a|a] (a in A) and [b|0] (b in B); rows whose left half
// becomes zero have their right half in the intersection.
Gf2Subspace Gf2Subspace::intersect(const Gf2Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Gf2Subspace: ambient mismatch");
  std::size_t n = ambient_;
  std::vector<EdgeVector> rows;
  rows.reserve(dim() + other.dim());
  for (const auto& a : basis_) {
    EdgeVector r(2 * n);
    for (int i : a.set_bits()) {
      r.set(static_cast<std::size_t>(i));
      r.set(static_cast<std::size_t>(i) + n);
    }
    rows.push_back(std::move(r));
  }
  for (const auto& b : other.basis_) {
    EdgeVector r(2 * n);
    for (int i : b.set_bits()) r.set(static_cast<std::size_t>(i));
    rows.push_back(std::move(r));
  }
  Gf2Subspace elim = Gf2Subspace::span(rows, 2 * n);
  Gf2Subspace inter(n);
  std::size_t sum_dim = 0;
  for (const auto& r : elim.basis()) {
    if (*r.lowest_set() < n) {
      ++sum_dim;  // left half nonzero: contributes to A+B
      continue;
    }
    EdgeVector right(n);
    for (int i : r.set_bits()) right.set(static_cast<std::size_t>(i) - n);
    inter.insert(std::move(right));
  }
  if (dim() + other.dim() != sum_dim + inter.dim())
    throw structure_error("gf2 intersect: rank identity dim A + dim B = dim(A+B) + dim(A^B) failed");
  return inter;
}

Gf2Subspace Gf2Subspace::orth_complement() const {
  // kernel of the RREF basis matrix: one generator per non-pivot column
  std::vector<bool> is_pivot(ambient_, false);
  for (const auto& row : basis_) is_pivot[*row.lowest_set()] = true;
  Gf2Subspace comp(ambient_);
  for (std::size_t f = 0; f < ambient_; ++f) {
    if (is_pivot[f]) continue;
    EdgeVector w(ambient_);
    w.set(f);
    for (const auto& row : basis_)
      if (row.test(f)) w.set(*row.lowest_set());
    comp.insert(std::move(w));
  }
  if (comp.dim() + dim() != ambient_)
    throw structure_error("gf2 orth_complement: dim W + dim W-perp != ambient");
  return comp;
}

std::size_t Gf2Subspace::quotient_dim(const Gf2Subspace& sub) const {
  if (!contains_subspace(sub))
    throw structure_error("gf2 quotient_dim: denominator is not contained in the space");
  return dim() - sub.dim();
}

}  // namespace pogcut
