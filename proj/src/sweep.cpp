#include <chrono>
#include <sstream>

#include <omp.h>

#include "fxmpc/verify.hpp"

namespace fx {

bool in_domain(MathFn f, u64 x, int sx, int bits) {
  if (f == MathFn::Rsqrt) return x >= rsqrt_min_input(sx) && x < pow2(bits - 1);
  return x < pow2(bits);
}

u64 ulp_bound(MathFn f) {
  switch (f) {
    case MathFn::Exp: return 3;
    case MathFn::Sigmoid: return 3;
    case MathFn::Tanh: return 4;
    case MathFn::Rsqrt: return 4;
  }
  return 0;
}

std::vector<std::pair<int, int>> ulp_grid(MathFn f) {
  const int lo = f == MathFn::Rsqrt ? 4 : 8, hi = f == MathFn::Rsqrt ? 13 : 14;
  std::vector<std::pair<int, int>> g;
  for (int sx = lo; sx <= hi; ++sx)
    for (int sy = lo; sy <= hi; ++sy) g.emplace_back(sx, sy);
  return g;
}

std::pair<int, int> default_pair(MathFn f) {
  switch (f) {
    case MathFn::Exp: return {12, 14};
    case MathFn::Sigmoid: return {8, 14};
    case MathFn::Tanh: return {8, 14};
    case MathFn::Rsqrt: return {12, 11};
  }
  return {0, 0};
}

namespace {

std::vector<HighPrec> oracle_table(MathFn f, int sx, int bits, bool parallel) {
  const i64 n = static_cast<i64>(pow2(bits));
  std::vector<HighPrec> t(n);
  const bool sg = input_signed(f);
#pragma omp parallel for schedule(static) if (parallel)
  for (i64 x = 0; x < n; ++x)
    if (in_domain(f, static_cast<u64>(x), sx, bits)) t[x] = oracle(f, static_cast<u64>(x), bits, sx, sg);
  return t;
}

// Largest error wins; ties go to the smallest input so both drivers agree.
void merge(SweepResult& acc, const SweepResult& part) {
  if (part.max_ulp > acc.max_ulp || (part.max_ulp == acc.max_ulp && part.count && part.argmax < acc.argmax)) {
    acc.max_ulp = part.max_ulp;
    acc.argmax = part.argmax;
  }
  acc.count += part.count;
  acc.violations += part.violations;
}

SweepResult sweep_with(MathFn f, int sx, int sy, int bits, const std::vector<HighPrec>& orc, bool parallel) {
  const MathParams p = default_params(f, sx, sy, bits);
  const FixFmt fmt(bits, sy, true);
  const i64 n = static_cast<i64>(pow2(bits));
  SweepResult total;
  total.argmax = ~0ULL;
#pragma omp parallel if (parallel)
  {
    SweepResult local;
    local.argmax = ~0ULL;
#pragma omp for schedule(static) nowait
    for (i64 xi = 0; xi < n; ++xi) {
      const u64 x = static_cast<u64>(xi);
      if (!in_domain(f, x, sx, bits)) continue;
      RefCheck chk;
      u64 e = ulp_error(reference(f, x, p, &chk), fmt, orc[x]);
      local.violations += chk.violations;
      ++local.count;
      if (e > local.max_ulp || (e == local.max_ulp && x < local.argmax)) {
        local.max_ulp = e;
        local.argmax = x;
      }
    }
#pragma omp critical
    merge(total, local);
  }
  if (total.count == 0) total.argmax = 0;
  return total;
}

SweepResult sweep_serial_with(MathFn f, int sx, int sy, int bits, const std::vector<HighPrec>& orc) {
  const MathParams p = default_params(f, sx, sy, bits);
  const FixFmt fmt(bits, sy, true);
  SweepResult r;
  for (u64 x = 0; x < pow2(bits); ++x) {
    if (!in_domain(f, x, sx, bits)) continue;
    RefCheck chk;
    u64 e = ulp_error(reference(f, x, p, &chk), fmt, orc[x]);
    r.violations += chk.violations;
    if (r.count++ == 0 || e > r.max_ulp) {
      r.max_ulp = e;
      r.argmax = x;
    }
  }
  return r;
}

}  // namespace

SweepResult ulp_sweep(MathFn f, int sx, int sy, int bits) {
  return sweep_with(f, sx, sy, bits, oracle_table(f, sx, bits, true), true);
}

SweepResult ulp_sweep_serial(MathFn f, int sx, int sy, int bits) {
  return sweep_serial_with(f, sx, sy, bits, oracle_table(f, sx, bits, false));
}

Report cmd_verify(const std::vector<MathFn>& fns, const std::vector<std::pair<int, int>>& pairs, int bits) {
  Report rep;
  for (MathFn f : fns) {
    std::vector<std::pair<int, int>> todo = pairs.empty() ? ulp_grid(f) : pairs;
    int cached_sx = -1;
    std::vector<HighPrec> orc;
    for (auto [sx, sy] : todo) {
      auto t0 = std::chrono::steady_clock::now();
      if (sx != cached_sx) {
        orc = oracle_table(f, sx, bits, true);
        cached_sx = sx;
      }
      SweepResult r = sweep_with(f, sx, sy, bits, orc, true);
      Row row;
      row.suite = "ulp";
      row.name = fn_name(f);
      std::ostringstream ps;
      ps << "bits=" << bits << " sx=" << sx << " sy=" << sy;
      row.params = ps.str();
      row.source = "oracle";
      row.max_ulp = r.max_ulp;
      row.bound = static_cast<double>(ulp_bound(f));
      row.cases = r.count;
      row.mismatches = r.violations;
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      row.pass = r.max_ulp <= ulp_bound(f) && r.violations == 0 && r.count > 0;
      std::ostringstream note;
      note << "worst x=" << r.argmax;
      if (r.violations) note << ", reference width assumptions broken";
      row.note = note.str();
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace fx
