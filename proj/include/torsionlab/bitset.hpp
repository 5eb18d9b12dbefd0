#pragma once

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/functional/hash.hpp>

namespace torsionlab {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using BitsetHash = boost::hash<Bitset>;

/// Indices of the set bits, ascending.
inline std::vector<std::size_t> members(const Bitset& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

inline Bitset bitset_of(std::size_t size, const std::vector<std::size_t>& idx) {
  Bitset b(size);
  for (auto i : idx) b.set(i);
  return b;
}

}  // namespace torsionlab
