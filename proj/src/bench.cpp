#include <chrono>
#include <random>
#include <sstream>

#include "fxmpc/verify.hpp"

namespace fx {

double bench_kb_limit(MathFn f) {
  switch (f) {
    case MathFn::Exp: return 2.7;
    case MathFn::Sigmoid: return 6.0;
    case MathFn::Tanh: return 6.0;
    case MathFn::Rsqrt: return 7.5;
  }
  return 0;
}

BenchResult bench_party(Session& s, MathFn f, const MathParams& p, size_t instances, u64 seed) {
  // Both parties derive the same secrets and splits from the seed; P0 keeps the first share.
  std::mt19937_64 rng(seed);
  std::vector<u64> xs(instances), mine(instances);
  for (size_t i = 0; i < instances; ++i) {
    u64 x = mod2(rng(), p.m);
    if (f == MathFn::Rsqrt) x = rsqrt_min_input(p.s) + x % (pow2(p.m - 1) - rsqrt_min_input(p.s));
    const u64 r = mod2(rng(), p.m);
    xs[i] = x;
    mine[i] = s.role() == 0 ? r : mod2(x - r, p.m);
  }
  s.meter().reset();
  auto t0 = std::chrono::steady_clock::now();
  AShare y = secure_eval(s, f, AShare(p.m, mine), p);
  BenchResult r{f, p, instances, s.meter().total().total(), s.meter().rounds(), 0, 0};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::vector<u64> out = reveal(s, y);
  for (size_t i = 0; i < instances; ++i) r.mismatches += out[i] != reference(f, xs[i], p);
  return r;
}

BenchResult bench_inproc(MathFn f, const MathParams& p, size_t instances, u64 seed, int lambda) {
  auto [s0, s1] = open_inproc_pair(seed, lambda, lambda);
  BenchResult r0, r1;
  run_pair(s0, s1, [&](Session& s) { (s.role() == 0 ? r0 : r1) = bench_party(s, f, p, instances, seed); });
  return r0;
}

Row bench_row(const BenchResult& b, double kb_limit) {
  Row r;
  r.suite = "bench";
  r.name = fn_name(b.fn);
  std::ostringstream ps;
  ps << "sx=" << b.params.s << " sy=" << b.params.sp << " n=" << b.instances;
  r.params = ps.str();
  r.source = "KB limit";
  r.measured = b.bits;
  r.rounds = b.rounds;
  r.cases = b.instances;
  r.mismatches = b.mismatches;
  r.seconds = b.seconds;
  r.bound = kb_limit;
  r.ratio = b.kb_per_instance() / kb_limit;
  std::ostringstream note;
  note.setf(std::ios::fixed);
  note.precision(3);
  note << b.kb_per_instance() << " KB/instance, " << b.seconds << " s";
  r.note = note.str();
  r.pass = b.kb_per_instance() <= kb_limit && b.mismatches == 0;
  return r;
}

}  // namespace fx
