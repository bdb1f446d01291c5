#include <random>
#include <sstream>

#include "fxmpc/verify.hpp"

namespace fx {

namespace {

using Words = std::vector<u64>;
using cost::Hint;

// Operand description: width and whether the secret must have a zero MSB (public hint).
struct Operand {
  int width;
  bool msb0 = false;
};

struct Inputs {
  std::vector<Words> secret;
  std::vector<Words> share;  // this party's shares
  std::vector<Bits> msb_share;
};

using Body = std::function<void(Session&, const Inputs&)>;

struct Measure {
  u64 bits = 0;
  u64 rounds = 0;
};

Measure run_once(const std::vector<Operand>& ops, size_t n, u64 seed, int lambda, const Body& body) {
  std::mt19937_64 rng(seed);
  Inputs in0, in1;
  for (auto& op : ops) {
    Words sec(n), a(n), b(n);
    Bits m0(n), m1(n);
    for (size_t i = 0; i < n; ++i) {
      sec[i] = mod2(rng(), op.msb0 ? op.width - 1 : op.width);
      a[i] = mod2(rng(), op.width);
      b[i] = mod2(sec[i] - a[i], op.width);
      m0[i] = rng() & 1;
      m1[i] = static_cast<uint8_t>(m0[i] ^ msb_of(sec[i], op.width));
    }
    in0.secret.push_back(sec);
    in1.secret.push_back(sec);
    in0.share.push_back(a);
    in1.share.push_back(b);
    in0.msb_share.push_back(m0);
    in1.msb_share.push_back(m1);
  }
  auto [s0, s1] = open_inproc_pair(seed, lambda, lambda);
  run_pair(s0, s1, [&](Session& s) { body(s, s.role() == 0 ? in0 : in1); });
  return {s0.meter().total().total(), s0.meter().rounds()};
}

WrapHint hint_for(Hint h, const Inputs& in, size_t k) {
  switch (h) {
    case Hint::None: return WrapHint::none();
    case Hint::Public: return WrapHint::msb_public(false);
    case Hint::Shared: return WrapHint::msb_shared(in.msb_share[k]);
  }
  return {};
}

const char* hint_tag(Hint h) { return h == Hint::None ? "" : h == Hint::Public ? "*" : "+"; }

struct Auditor {
  int lambda;
  u64 seed;
  size_t trials;
  Report rep;

  // `bound` < 0 means no reference expression for this row.
  void row(const std::string& name, const std::string& params, const std::vector<Operand>& ops, u64 expected,
           double bound, const std::string& source, const Body& body, double limit_ratio = 1.25) {
    Row r;
    r.suite = "audit";
    r.name = name;
    r.params = params;
    r.source = source;
    r.expected = expected;
    std::mt19937_64 rng(seed ^ std::hash<std::string>{}(name + params));
    bool exact = true, independent = true;
    Measure first{};
    for (size_t t = 0; t < trials; ++t) {
      Measure m = run_once(ops, 1, rng(), lambda, body);
      if (t == 0) first = m;
      independent &= m.bits == first.bits && m.rounds == first.rounds;
      exact &= m.bits == expected;
    }
    // A batch must cost exactly the per-instance amount times its size.
    const size_t batch = 16;
    Measure mb = run_once(ops, batch, rng(), lambda, body);
    exact &= mb.bits == expected * batch;
    r.measured = first.bits;
    r.rounds = first.rounds;
    r.cases = trials;
    bool within = true;
    if (bound >= 0) {
      r.bound = bound;
      r.ratio = static_cast<double>(first.bits) / bound;
      within = *r.ratio <= limit_ratio;
    }
    std::ostringstream note;
    if (!exact) note << "formula mismatch (batch of " << batch << " measured " << mb.bits << ") ";
    if (!independent) note << "input-dependent cost ";
    if (!within) note << "exceeds " << limit_ratio << "x bound";
    r.note = note.str();
    r.pass = exact && independent && within;
    rep.rows.push_back(std::move(r));
  }
};

std::string lp(int l, int s) { return "l=" + std::to_string(l) + " s=" + std::to_string(s); }

}  // namespace

Report cmd_audit(int lambda, u64 seed, size_t trials) {
  Auditor a{lambda, seed, trials, {}};
  a.rep.seed = seed;
  a.rep.lambda = lambda;
  const int L = lambda;

  // Gadgets.
  for (int k : {4, 2}) {
    const int b = k == 4 ? 8 : 1;
    const std::string ps = "1-of-" + std::to_string(k) + ", " + std::to_string(b) + "-bit";
    a.row("OT", ps, {{k == 4 ? 2 : 1}}, cost::ot(k, b, L), bounds::ot(k, b, L), k == 4 ? "2λ+kℓ" : "λ+2ℓ",
          [k, b](Session& s, const Inputs& in) {
            const size_t n = in.share[0].size();
            if (s.role() == 0) ot_1_of_k(s, 0, k, b, std::vector<u64>(n * k, 1), {});
            else ot_1_of_k(s, 0, k, b, {}, in.share[0]);
          });
  }
  a.row("COT", "l=32", {{1}, {32}}, cost::cot(32, L), bounds::cot(32, L), "λ+ℓ", [](Session& s, const Inputs& in) {
    if (s.role() == 0) cot(s, 0, 32, in.share[1], {});
    else cot(s, 0, 32, {}, Bits(in.share[0].begin(), in.share[0].end()));
  });
  a.row("B2A", "l=32", {{1}}, cost::b2a(32, L), bounds::b2a(32, L), "λ+ℓ", [](Session& s, const Inputs& in) {
    b2a(s, Bits(in.share[0].begin(), in.share[0].end()), 32);
  });
  a.row("MUX", "l=32", {{1}, {32}}, cost::mux(32, L), bounds::mux(32, L), "2(λ+ℓ)", [](Session& s, const Inputs& in) {
    mux(s, Bits(in.share[0].begin(), in.share[0].end()), AShare(32, in.share[1]));
  });
  a.row("LUT", "m=8 n=16", {{8}}, cost::lut(8, 16, L), bounds::lut(8, 16, L), "2λ+2^m n", [](Session& s, const Inputs& in) {
    std::vector<u64> table(256);
    for (u64 i = 0; i < 256; ++i) table[i] = i * 257;
    lut(s, table, 16, AShare(8, in.share[0]));
  });
  for (Hint h : {Hint::Public, Hint::Shared}) {
    a.row("MSBtoWrap", h == Hint::Public ? "public MSB" : "shared MSB", {{32, h == Hint::Public}},
          cost::msb_to_wrap(h, L), bounds::msb_to_wrap(h == Hint::Shared, L), "λ+2 / 2λ+4",
          [h](Session& s, const Inputs& in) { msb_to_wrap(s, AShare(32, in.share[0]), hint_for(h, in, 0)); });
  }

  // Comparisons against the assumed λℓ + 14ℓ.
  for (int l : {16, 32, 64}) {
    const double mb = static_cast<double>(L) * l + 14.0 * l;
    a.row("Mill", "l=" + std::to_string(l), {{l}}, cost::wrap(l, L), mb, "λℓ+14ℓ",
          [l](Session& s, const Inputs& in) { wrap_bits(s, in.share[0], l); });
    a.row("WrapEq", "l=" + std::to_string(l), {{l}}, cost::wrapeq(l, L), mb, "λℓ+14ℓ",
          [l](Session& s, const Inputs& in) { wrapeq_bits(s, in.share[0], l); });
  }

  for (auto [l, sh] : {std::pair{16, 8}, std::pair{32, 12}, std::pair{64, 16}}) {
    const int m = sh, n = l;
    for (Hint h : {Hint::None, Hint::Public, Hint::Shared}) {
      const double extra = h == Hint::Shared ? L + 2.0 : 0.0;
      const double zb = h == Hint::None ? bounds::zxt(m, n, L) : bounds::zxt_hint(m, n, L) + extra;
      const std::string zp = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      a.row(std::string(hint_tag(h)) + "ZXt", zp, {{m, h == Hint::Public}}, cost::zxt(m, n, h, L), zb, "table",
            [=](Session& s, const Inputs& in) { zxt(s, AShare(m, in.share[0]), n, hint_for(h, in, 0)); });
      a.row(std::string(hint_tag(h)) + "SXt", zp, {{m, h == Hint::Public}}, cost::sxt(m, n, h, L), zb, "table",
            [=](Session& s, const Inputs& in) { sxt(s, AShare(m, in.share[0]), n, hint_for(h, in, 0)); });
      const double lb = h == Hint::None ? bounds::lrs(l, sh, L) : bounds::lrs_hint(l, sh, L) + extra;
      a.row(std::string(hint_tag(h)) + "LRS", lp(l, sh), {{l, h == Hint::Public}}, cost::lrs(l, sh, h, L), lb, "table",
            [=](Session& s, const Inputs& in) { lrs(s, AShare(l, in.share[0]), sh, hint_for(h, in, 0)); });
      a.row(std::string(hint_tag(h)) + "ARS", lp(l, sh), {{l, h == Hint::Public}}, cost::ars(l, sh, h, L), lb, "table",
            [=](Session& s, const Inputs& in) { ars(s, AShare(l, in.share[0]), sh, hint_for(h, in, 0)); });
      const int um = l - sh, un = sh;
      const double mbnd = h == Hint::None ? bounds::umult(um, un, L) : bounds::umult_hint(um, un, L) + 2 * extra;
      const std::string mp = "m=" + std::to_string(um) + " n=" + std::to_string(un) + " l=" + std::to_string(l);
      std::vector<Operand> mops{{um, h == Hint::Public}, {un, h == Hint::Public}};
      a.row(std::string(hint_tag(h)) + "UMult", mp, mops, cost::umult(um, un, l, h, h, L), mbnd, "table",
            [=](Session& s, const Inputs& in) {
              umult(s, AShare(um, in.share[0]), AShare(un, in.share[1]), l, hint_for(h, in, 0), hint_for(h, in, 1));
            });
      a.row(std::string(hint_tag(h)) + "SMult", mp, mops, cost::smult(um, un, l, h, h, L), mbnd, "table",
            [=](Session& s, const Inputs& in) {
              smult(s, AShare(um, in.share[0]), AShare(un, in.share[1]), l, hint_for(h, in, 0), hint_for(h, in, 1));
            });
    }
    a.row("TR", lp(l, sh), {{l}}, cost::tr(l, sh, L), bounds::tr(l, sh, L), "table",
          [=](Session& s, const Inputs& in) { tr(s, AShare(l, in.share[0]), sh); });
    a.row("DivPow2", lp(l, sh), {{l}}, cost::div_pow2(l, sh, L), bounds::div_pow2(l, sh, L), "table",
          [=](Session& s, const Inputs& in) { div_pow2(s, AShare(l, in.share[0]), sh); });
    a.row("DigDec", "l=" + std::to_string(l) + " d=8", {{l}}, cost::digdec(equal_digits(l, 8), L),
          bounds::digdec(l, 8, L), "table",
          [=](Session& s, const Inputs& in) { digdec(s, AShare(l, in.share[0]), equal_digits(l, 8)); });
    a.row("MSNZB", "l=" + std::to_string(l) + " d=8", {{l}}, cost::msnzb(l, 8, L), bounds::msnzb(l, 8, L), "table",
          [=](Session& s, const Inputs& in) { msnzb(s, AShare(l, in.share[0]), 8); });
  }

  // Math functions at the default parameters; bounds are the benchmark limits in bits.
  for (MathFn f : {MathFn::Exp, MathFn::Sigmoid, MathFn::Tanh, MathFn::Rsqrt}) {
    auto [sx, sy] = default_pair(f);
    const MathParams p = default_params(f, sx, sy);
    const double limit = bench_kb_limit(f) * 8192.0;
    std::ostringstream ps;
    ps << "sx=" << sx << " sy=" << sy;
    Operand op{16, f == MathFn::Rsqrt};
    a.row(fn_name(f), ps.str(), {op}, cost::math(f, p, L), limit, "KB limit",
          [f, p](Session& s, const Inputs& in) {
            Words x = in.share[0];
            // Keep rsqrt inside its domain: shift the secret up by the domain minimum.
            if (f == MathFn::Rsqrt && s.role() == 0)
              for (auto& v : x) v = mod2(v + rsqrt_min_input(p.s), 16);
            secure_eval(s, f, AShare(16, x), p);
          },
          1.0);
  }
  return a.rep;
}

}  // namespace fx
