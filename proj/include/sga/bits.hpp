#ifndef SGA_BITS_HPP
#define SGA_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace sga {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool bit(Mask m, int i) { return (m >> i) & 1u; }

inline Mask with_bit(Mask m, int i) { return m | (Mask{1} << i); }

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

} // namespace sga

#endif
