#pragma once
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pogcut {

// Subset of a fixed edge ground set E, i.e. a vector over GF(2)^|E|.
// Bit-packed, 64 bits per word; bit i of the vector is word i/64, bit i%64.
class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}
  EdgeVector(std::size_t len, std::initializer_list<int> bits);
  EdgeVector(std::size_t len, std::span<const int> bits);

  std::size_t size() const { return len_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);
  std::size_t popcount() const;
  bool is_zero() const;
  std::optional<std::size_t> lowest_set() const;
  std::vector<int> set_bits() const;
  std::string to_string() const;  // e.g. "01101...", bit 0 first

  EdgeVector& operator^=(const EdgeVector& other);
  friend EdgeVector operator^(EdgeVector a, const EdgeVector& b) { return a ^= b; }
  bool operator==(const EdgeVector& other) const = default;
  // Lexicographic on the bit string read from index 0.
  std::strong_ordering operator<=>(const EdgeVector& other) const;

  friend bool orthogonal(const EdgeVector& a, const EdgeVector& b);

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
  void check_len(const EdgeVector& other) const;
};

inline EdgeVector sym_diff(EdgeVector a, const EdgeVector& b) { return a ^= b; }
bool orthogonal(const EdgeVector& a, const EdgeVector& b);

// Subspace of GF(2)^ambient kept as a reduced-row-echelon basis
// (leading bits strictly increasing, each leading bit cleared from all other rows),
// so equal subspaces compare equal row-for-row.
class Gf2Subspace {
 public:
  explicit Gf2Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Gf2Subspace zero(std::size_t ambient) { return Gf2Subspace(ambient); }
  static Gf2Subspace full(std::size_t ambient);
  static Gf2Subspace span(std::span<const EdgeVector> vectors, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<EdgeVector>& basis() const { return basis_; }

  // Residue of v after eliminating with the basis; zero iff v is in the subspace.
  EdgeVector reduce(EdgeVector v) const;
  bool contains(const EdgeVector& v) const { return reduce(v).is_zero(); }
  bool contains_subspace(const Gf2Subspace& other) const;

  void insert(EdgeVector v);  // grow the span by one vector
  Gf2Subspace sum(const Gf2Subspace& other) const;
  Gf2Subspace intersect(const Gf2Subspace& other) const;
  Gf2Subspace orth_complement() const;
  // dim(*this / sub); requires sub to be contained in *this.
  std::size_t quotient_dim(const Gf2Subspace& sub) const;

  bool operator==(const Gf2Subspace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<EdgeVector> basis_;
};

}  // namespace pogcut
