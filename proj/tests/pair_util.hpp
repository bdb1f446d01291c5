#pragma once

#include <functional>
#include <random>

#include "fxmpc/secure_math.hpp"

namespace fx::test {

struct Split {
  std::vector<u64> s0, s1;
};

inline Split split(const std::vector<u64>& xs, int w, std::mt19937_64& rng) {
  Split r;
  for (u64 x : xs) {
    u64 a = mod2(rng(), w);
    r.s0.push_back(a);
    r.s1.push_back(mod2(x - a, w));
  }
  return r;
}

inline Bits split_bits(const Bits& xs, std::mt19937_64& rng, Bits& other) {
  Bits mine;
  other.clear();
  for (uint8_t b : xs) {
    uint8_t a = rng() & 1;
    mine.push_back(a);
    other.push_back(a ^ b);
  }
  return mine;
}

// Runs f on both parties and returns P0's revealed output with the bits each party metered.
struct Outcome {
  std::vector<u64> out;
  u64 bits = 0;
  u64 rounds = 0;
};

inline Outcome run_shared(const std::vector<u64>& xs, int w,
                          const std::function<AShare(Session&, const AShare&)>& f, u64 seed = 1) {
  std::mt19937_64 rng(seed);
  Split sp = split(xs, w, rng);
  auto [s0, s1] = open_inproc_pair(seed);
  Outcome r0, r1;
  run_pair(s0, s1, [&](Session& s) {
    AShare x(w, s.role() == 0 ? sp.s0 : sp.s1);
    AShare y = f(s, x);
    Outcome& r = s.role() == 0 ? r0 : r1;
    r.bits = s.meter().total().total();
    r.rounds = s.meter().rounds();
    r.out = reveal(s, y);
  });
  return r0;
}

inline Outcome run_bits(const std::function<Bits(Session&)>& f, u64 seed = 1) {
  auto [s0, s1] = open_inproc_pair(seed);
  Outcome r0, r1;
  run_pair(s0, s1, [&](Session& s) {
    Bits y = f(s);
    Outcome& r = s.role() == 0 ? r0 : r1;
    r.bits = s.meter().total().total();
    r.rounds = s.meter().rounds();
    Bits o = reveal(s, y);
    r.out.assign(o.begin(), o.end());
  });
  return r0;
}

}  // namespace fx::test

namespace fx::test {

// Like run_shared but with the share halves given explicitly.
inline Outcome run_halves(const Split& sp, int w,
                          const std::function<AShare(Session&, const AShare&)>& f, u64 seed = 1) {
  auto [s0, s1] = open_inproc_pair(seed);
  Outcome r0, r1;
  run_pair(s0, s1, [&](Session& s) {
    AShare y = f(s, AShare(w, s.role() == 0 ? sp.s0 : sp.s1));
    Outcome& r = s.role() == 0 ? r0 : r1;
    r.bits = s.meter().total().total();
    r.rounds = s.meter().rounds();
    r.out = reveal(s, y);
  });
  return r0;
}

// Every secret under every splitting at width w.
inline Split all_splits(int w, std::vector<u64>& secrets) {
  Split sp;
  secrets.clear();
  for (u64 a = 0; a < pow2(w); ++a)
    for (u64 b = 0; b < pow2(w); ++b) {
      sp.s0.push_back(a);
      sp.s1.push_back(b);
      secrets.push_back(mod2(a + b, w));
    }
  return sp;
}

}  // namespace fx::test
