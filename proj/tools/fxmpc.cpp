#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "fxmpc/verify.hpp"

using namespace fx;

namespace {

std::vector<MathFn> parse_fns(const std::string& s) {
  if (s == "all") return {MathFn::Exp, MathFn::Sigmoid, MathFn::Tanh, MathFn::Rsqrt};
  return {parse_fn(s)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-point secure math: verification, equivalence, audits and benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string fn = "all", transport = "inproc", host = "127.0.0.1", role = "p0", format = "text", out;
  int sx = -1, sy = -1, bits = 16, port = 7766, lambda = 128, max_bits = 8, mult_bits = 6;
  size_t instances = 10000, trials = 100;
  u64 seed = 1, samples = 1000;
  bool blocks = false, math = false, full = false;

  app.add_option("--fn", fn, "exp|sigmoid|tanh|rsqrt|all");
  app.add_option("--sx", sx, "input scale");
  app.add_option("--sy", sy, "output scale");
  app.add_option("--bitwidth", bits, "input and output width");
  app.add_option("--instances", instances, "batched instances for bench");
  app.add_option("--transport", transport, "inproc|tcp")->check(CLI::IsMember({"inproc", "tcp"}));
  app.add_option("--host", host, "TCP host");
  app.add_option("--port", port, "TCP port");
  app.add_option("--role", role, "p0|p1 (tcp)")->check(CLI::IsMember({"p0", "p1"}));
  app.add_option("--seed", seed, "session seed");
  app.add_option("--lambda", lambda, "security parameter for OT costs");
  app.add_option("--report", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out, "write the report to FILE");

  auto* verify = app.add_subcommand("verify", "exhaustive ULP sweeps against the high-precision oracle");
  auto* equiv = app.add_subcommand("equiv", "secure protocols against cleartext references");
  equiv->add_flag("--blocks", blocks, "building-block suites only");
  equiv->add_flag("--math", math, "math-function suites only");
  equiv->add_option("--max-bits", max_bits, "width limit for block suites");
  equiv->add_option("--mult-bits", mult_bits, "operand width limit for multiplication suites");
  equiv->add_option("--samples", samples, "random inputs per parameter pair");
  equiv->add_flag("--full", full, "exhaustive 16-bit check at each function's default parameters");
  auto* audit = app.add_subcommand("audit", "communication audit against cost formulas");
  audit->add_option("--trials", trials, "random inputs per protocol for input independence");
  auto* bench = app.add_subcommand("bench", "batched benchmark over inproc or TCP");

  CLI11_PARSE(app, argc, argv);

  Report rep;
  rep.seed = seed;
  rep.lambda = lambda;
  rep.transport = transport;
  try {
    if (*verify) {
      std::vector<std::pair<int, int>> pairs;
      if (sx >= 0 && sy >= 0) pairs.push_back({sx, sy});
      rep.append(cmd_verify(parse_fns(fn), pairs, bits));
    } else if (*equiv) {
      const bool both = !blocks && !math;
      if (blocks || both) {
        rep.append(cmd_equiv_blocks({max_bits, mult_bits, seed}));
        rep.append(wrap_split_check(max_bits));
      }
      if (math || both) {
        if (sx >= 0 && sy >= 0) {
          for (MathFn f : parse_fns(fn)) rep.rows.push_back(math_equiv(f, sx, sy, bits, full ? 0 : samples, seed));
        } else {
          rep.append(cmd_equiv_math(parse_fns(fn), samples, seed, full));
        }
      }
    } else if (*audit) {
      rep.append(cmd_audit(lambda, seed, trials));
    } else if (*bench) {
      for (MathFn f : parse_fns(fn)) {
        auto pp = default_pair(f);
        MathParams p = default_params(f, sx >= 0 ? sx : pp.first, sy >= 0 ? sy : pp.second, bits);
        BenchResult r;
        if (transport == "inproc") {
          r = bench_inproc(f, p, instances, seed, lambda);
        } else {
          SessionConfig cfg;
          cfg.role = role == "p0" ? 0 : 1;
          cfg.lambda = lambda;
          cfg.seed = seed * 2 + cfg.role;
          Session s = open_tcp_session(cfg.role, host, port, cfg);
          r = bench_party(s, f, p, instances, seed);
          s.close();
        }
        rep.rows.push_back(bench_row(r, bench_kb_limit(f)));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = format == "json" ? to_json(rep) : to_text(rep);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    f << text;
  }
  return rep.pass() ? 0 : 1;
}
