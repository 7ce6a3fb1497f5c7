#pragma once
#include <stdexcept>
#include <string>
#include <utility>

namespace pogcut {

// Bad user-supplied input (CLI maps these to exit code 2).
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A guarded operation was asked for an instance above its size guard.
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction-time invariant failed; the message names the invariant.
struct structure_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edges of K_z: unordered pairs {i,j}, 1 <= i < j <= z, in lexicographic order.
// id({1,2}) = 0, id({1,3}) = 1, ..., id({z-1,z}) = z(z-1)/2 - 1.
inline int edge_count_kz(int z) { return z * (z - 1) / 2; }

inline int edge_id(int i, int j, int z) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > z || i == j)
    throw input_error("edge_id: bad endpoints " + std::to_string(i) + "," + std::to_string(j) +
                      " for z=" + std::to_string(z));
  return (i - 1) * z - i * (i - 1) / 2 + (j - i - 1);
}

inline std::pair<int, int> edge_pair(int id, int z) {
  if (id < 0 || id >= edge_count_kz(z)) throw input_error("edge_pair: id out of range");
  int i = 1;
  while (id >= z - i) { id -= z - i; ++i; }
  return {i, i + 1 + id};
}

}  // namespace pogcut
