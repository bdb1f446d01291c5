#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fxmpc/cost_model.hpp"
#include "fxmpc/secure_math.hpp"

namespace fx {

struct Row {
  std::string suite;
  std::string name;
  std::string params;
  std::string source;  // where the expected value comes from
  std::optional<u64> measured;
  std::optional<u64> expected;
  std::optional<double> bound;
  std::optional<double> ratio;
  std::optional<u64> rounds;
  std::optional<u64> max_ulp;
  std::optional<u64> mismatches;
  std::optional<u64> cases;
  std::optional<double> seconds;
  std::string note;
  bool pass = false;
};

struct Report {
  u64 seed = 1;
  int lambda = 128;
  std::string transport = "inproc";
  std::vector<Row> rows;

  bool pass() const;
  void append(const Report& other);
};

std::string to_json(const Report& r, bool with_timing = true);
std::string to_text(const Report& r);

// Exhaustive ULP sweeps over every 16-bit (or `bits`-bit) input in the function's domain.
struct SweepResult {
  u64 max_ulp = 0;
  u64 argmax = 0;
  u64 count = 0;
  size_t violations = 0;  // width/sign assumptions broken inside the reference
  bool operator==(const SweepResult&) const = default;
};

bool in_domain(MathFn f, u64 x, int sx, int bits);
u64 ulp_bound(MathFn f);
std::vector<std::pair<int, int>> ulp_grid(MathFn f);
std::pair<int, int> default_pair(MathFn f);

SweepResult ulp_sweep(MathFn f, int sx, int sy, int bits = 16);
SweepResult ulp_sweep_serial(MathFn f, int sx, int sy, int bits = 16);
Report cmd_verify(const std::vector<MathFn>& fns, const std::vector<std::pair<int, int>>& pairs, int bits = 16);

// Secure-vs-reference identity for math functions; exhaustive when samples == 0.
Row math_equiv(MathFn f, int sx, int sy, int bits, u64 samples, u64 seed);
Report cmd_equiv_math(const std::vector<MathFn>& fns, u64 samples, u64 seed, bool exhaustive_default_pair);

// Brute-force block suites over every secret and share splitting.
struct BlockScope {
  int max_bits = 8;       // single-operand blocks
  int max_mult_bits = 6;  // two-operand multiplications
  u64 seed = 1;
};
Report cmd_equiv_blocks(const BlockScope& scope);
Report wrap_split_check(int max_bits);

Report cmd_audit(int lambda, u64 seed, size_t independence_trials = 100);

struct BenchResult {
  MathFn fn;
  MathParams params;
  size_t instances = 0;
  u64 bits = 0;  // both directions, this party's view
  u64 rounds = 0;
  double seconds = 0;
  size_t mismatches = 0;
  double kb_per_instance() const { return static_cast<double>(bits) / 8.0 / 1024.0 / static_cast<double>(instances); }
};
// One party's side of a batched benchmark; inputs are derived from the shared seed.
BenchResult bench_party(Session& s, MathFn f, const MathParams& p, size_t instances, u64 seed);
BenchResult bench_inproc(MathFn f, const MathParams& p, size_t instances, u64 seed, int lambda = 128);
Row bench_row(const BenchResult& b, double kb_limit);
double bench_kb_limit(MathFn f);

}  // namespace fx
