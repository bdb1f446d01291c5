#pragma once

#include <functional>
#include <vector>

#include "fxmpc/transport.hpp"

namespace fx {

// Boolean shares, one bit per element.
using Bits = std::vector<uint8_t>;

// This party's additive shares of a batch of values over Z_{2^width}.
struct AShare {
  int width = 1;
  std::vector<u64> v;

  AShare() = default;
  AShare(int w, std::vector<u64> vals) : width(w), v(std::move(vals)) {
    require(w >= 1 && w <= kMaxWidth, "share width must be in [1, 64]");
    for (auto& x : v) x = mod2(x, w);
  }
  AShare(int w, size_t n) : width(w), v(n, 0) {
    require(w >= 1 && w <= kMaxWidth, "share width must be in [1, 64]");
  }
  size_t size() const { return v.size(); }
};

// One batched OT/COT step. Groups on the sending side of one party pair up, in order,
// with the receiving groups of the other party.
struct OtSend {
  int k;
  int bits;
  std::vector<u64> msgs;  // n * k, message j of instance i at i * k + j
};
struct OtRecv {
  int k;
  int bits;
  std::vector<u64> choice;  // n
};
struct CotSend {
  int width;
  int vec;
  std::vector<u64> corr;  // n * vec
};
struct CotRecv {
  int width;
  int vec;
  Bits choice;  // n
};
struct Transfer {
  std::vector<OtSend> ot_send;
  std::vector<OtRecv> ot_recv;
  std::vector<CotSend> cot_send;
  std::vector<CotRecv> cot_recv;
};
struct TransferOut {
  std::vector<std::vector<u64>> ot;        // per OtRecv group: chosen messages
  std::vector<std::vector<u64>> cot_send;  // per CotSend group: r
  std::vector<std::vector<u64>> cot_recv;  // per CotRecv group: -r + j * x
};

// Simulated OT extension: wire cost is exact to the cost model (receiver lambda bits per
// 1-of-2 OT or COT, 2 lambda per 1-of-k OT, sender k * bits or vec * width), but masks are
// drawn from a joint seed both parties know. Not secure; correctness only.
TransferOut transfer(Session& s, const Transfer& t);

int ot_receiver_bits(int k, int lambda);
u64 ot_cost(int k, int bits, int lambda);
u64 cot_cost(int width, int vec, int lambda);

// Single-group conveniences; `sender` names the party holding messages or correlations.
std::vector<u64> ot_1_of_k(Session& s, int sender, int k, int bits, const std::vector<u64>& msgs,
                           const std::vector<u64>& choice);
std::vector<u64> cot(Session& s, int sender, int width, const std::vector<u64>& corr,
                     const Bits& choice);

Bits xor_bits(const Bits& a, const Bits& b);
// Adds a public constant bit: only P0 flips its share.
Bits xor_public(const Session& s, const Bits& a, bool c);
Bits not_bits(const Session& s, const Bits& a);

// AND via bit triples from a 1-of-4 OT (2 lambda + 8 per AND with the opening), and a
// paired variant a & b1, a & b2 from a 1-of-8 OT with 2-bit messages (2 lambda + 22).
Bits and_bits(Session& s, const Bits& x, const Bits& y);
std::pair<Bits, Bits> and_pairs(Session& s, const Bits& a, const Bits& b1, const Bits& b2);
struct AndMixedOut {
  Bits single;
  Bits pair1;
  Bits pair2;
};
AndMixedOut and_mixed(Session& s, const Bits& x, const Bits& y, const Bits& a, const Bits& b1,
                      const Bits& b2);

AShare b2a(Session& s, const Bits& x, int width);
AShare mux(Session& s, const Bits& x, const AShare& y);
// x[i] selects the row y[i * vec .. i * vec + vec).
AShare mux_vec(Session& s, const Bits& x, const AShare& y, int vec);

// [x < y] and [x = y] for x held by P0 and y held by P1, both `bits` wide.
struct MillOut {
  Bits lt;
  Bits eq;
};
MillOut mill(Session& s, const std::vector<u64>& mine, int bits, bool need_lt, bool need_eq);
constexpr int kMillLeaf = 4;

// Wrap bit of the two parties' `bits`-bit values; wrapeq adds [x0 + x1 = 2^bits - 1].
Bits wrap_bits(Session& s, const std::vector<u64>& mine, int bits);
struct WrapEqOut {
  Bits w;
  Bits e;
};
WrapEqOut wrapeq_bits(Session& s, const std::vector<u64>& mine, int bits);
// [x0 + x1 = 0 mod 2^bits].
Bits zero_test(Session& s, const std::vector<u64>& mine, int bits);
Bits msb_bits(Session& s, const AShare& x);

enum class FieldKind { Arith, Xor };
struct LutField {
  int bits;
  FieldKind kind;
};
// Index fields concatenate most significant first; output fields pack least significant first.
struct LutSpec {
  std::vector<LutField> in;
  std::vector<LutField> out;
  int in_bits() const;
  int out_bits() const;
};
constexpr int kMaxLutInputBits = 20;

// One 1-of-2^m OT; P0 builds every message from its own index shares.
std::vector<std::vector<u64>> lut_eval(Session& s, const LutSpec& spec,
                                       const std::function<u64(u64)>& table,
                                       const std::vector<std::vector<u64>>& in);
AShare lut(Session& s, const std::vector<u64>& table, int out_bits, const AShare& x);

// Boolean shares of the one-hot vector of z, packed low bit first per element.
std::vector<u64> onehot(Session& s, const AShare& z, int l);
Bits zeros(Session& s, const AShare& y);
// Digit whose least significant bit sits at `offset`; a zero digit maps to offset.
AShare msnzb_proj(Session& s, const AShare& y, int offset, int iota);
// Combined (MSNZBProj || Zeros) lookup on one digit.
struct DigitScan {
  AShare u;
  Bits v;
};
DigitScan digit_scan(Session& s, const AShare& y, int offset, int iota);

// Test-only reconstruction.
std::vector<u64> reveal(Session& s, const AShare& x);
Bits reveal(Session& s, const Bits& x);

}  // namespace fx
