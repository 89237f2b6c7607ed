#ifndef CUTLATTICE_BITS_HPP
#define CUTLATTICE_BITS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cutlattice/error.hpp"

namespace cutlattice {

// Fixed-width binary vector; one hypercube vertex label.
struct BitLabel {
  int width = 0;
  std::vector<uint64_t> w;

  static BitLabel zeros(int width) {
    BitLabel b;
    b.width = width;
    b.w.assign((width + 63) / 64, 0);
    return b;
  }

  bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v) {
    if (v)
      w[i >> 6] |= uint64_t{1} << (i & 63);
    else
      w[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  int hamming(const BitLabel& o) const {
    int h = 0;
    for (size_t i = 0; i < w.size(); ++i) h += std::popcount(w[i] ^ o.w[i]);
    return h;
  }

  int popcount() const {
    int h = 0;
    for (uint64_t x : w) h += std::popcount(x);
    return h;
  }

  void xor_with(const BitLabel& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
  }

  std::string to_string() const {
    std::string s(width, '0');
    for (int i = 0; i < width; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  static BitLabel from_string(const std::string& s) {
    BitLabel b = zeros(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1')
        fail(ErrorKind::Parse, "BitLabel: labels must be 0/1 strings");
      b.set(static_cast<int>(i), s[i] == '1');
    }
    return b;
  }

  friend bool operator==(const BitLabel&, const BitLabel&) = default;
  friend auto operator<=>(const BitLabel&, const BitLabel&) = default;
};

}  // namespace cutlattice

#endif
