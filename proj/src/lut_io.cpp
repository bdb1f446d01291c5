#include <istream>
#include <ostream>

#include "fxmpc/cleartext.hpp"

namespace fx {

namespace {

void put_le(std::ostream& os, u64 v, int bytes) {
  for (int i = 0; i < bytes; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

u64 get_le(std::istream& is, int bytes) {
  u64 v = 0;
  for (int i = 0; i < bytes; ++i) {
    int c = is.get();
    if (c == std::char_traits<char>::eof()) throw std::runtime_error("truncated LUT stream");
    v |= static_cast<u64>(c & 0xff) << (8 * i);
  }
  return v;
}

int entry_bytes(int n) { return (n + 7) / 8; }

}  // namespace

// Layout: u32 m, u32 n, u64 count, then count entries of ceil(n/8) bytes each, all little-endian.
void write_lut(std::ostream& os, const Lut& lut) {
  put_le(os, static_cast<u64>(lut.in_bits), 4);
  put_le(os, static_cast<u64>(lut.out_bits), 4);
  put_le(os, lut.entries.size(), 8);
  for (u64 e : lut.entries) put_le(os, e, entry_bytes(lut.out_bits));
}

Lut read_lut(std::istream& is) {
  Lut lut;
  lut.in_bits = static_cast<int>(get_le(is, 4));
  lut.out_bits = static_cast<int>(get_le(is, 4));
  u64 count = get_le(is, 8);
  if (lut.in_bits < 0 || lut.in_bits > 20 || count != pow2(lut.in_bits) || lut.out_bits < 1 ||
      lut.out_bits > 64)
    throw std::runtime_error("malformed LUT header");
  lut.entries.resize(count);
  for (auto& e : lut.entries) e = get_le(is, entry_bytes(lut.out_bits));
  return lut;
}

}  // namespace fx
