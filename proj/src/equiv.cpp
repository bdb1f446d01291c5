#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "fxmpc/verify.hpp"

namespace fx {

namespace {

using Words = std::vector<u64>;
// One party's batched work on cases [lo, hi); returns its output shares.
using Body = std::function<Words(Session&, u64 lo, u64 hi)>;
using Check = std::function<bool(u64 idx, size_t k, const Words& o0, const Words& o1, size_t n)>;

constexpr u64 kChunk = 1 << 15;

struct Tally {
  u64 cases = 0;
  u64 bad = 0;
  std::string first;
  double seconds = 0;
};

struct Suite {
  std::map<std::string, Tally> by_name;
  std::vector<std::string> order;
  std::map<std::string, std::string> params;

  Tally& at(const std::string& name) {
    if (!by_name.count(name)) order.push_back(name);
    return by_name[name];
  }
};

struct Pair {
  Session s0, s1;
  explicit Pair(u64 seed) : Pair(open_inproc_pair(seed)) {}
  explicit Pair(std::pair<Session, Session>&& p) : s0(std::move(p.first)), s1(std::move(p.second)) {}
};

// Runs `body` over cases [0, n) in chunks and checks every case with `check`.
void drive(Pair& pr, u64 n, const Body& body, const Check& check, Tally& t, const std::string& what) {
  auto t0 = std::chrono::steady_clock::now();
  for (u64 lo = 0; lo < n; lo += kChunk) {
    const u64 hi = std::min(n, lo + kChunk);
    Words o0, o1;
    run_pair(pr.s0, pr.s1, [&](Session& s) {
      Words o = body(s, lo, hi);
      (s.role() == 0 ? o0 : o1) = std::move(o);
    });
    for (u64 i = lo; i < hi; ++i) {
      ++t.cases;
      if (!check(i, static_cast<size_t>(i - lo), o0, o1, static_cast<size_t>(hi - lo))) {
        if (t.bad++ == 0) {
          std::ostringstream os;
          os << what << " case " << i;
          t.first = os.str();
        }
      }
    }
  }
  t.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Case i enumerates (x0, x1) as (i >> w, i & mask(w)); this party's share.
Words own_split(const Session& s, u64 lo, u64 hi, int w) {
  Words v(hi - lo);
  for (u64 i = lo; i < hi; ++i) v[i - lo] = s.role() == 0 ? i >> w : mod2(i, w);
  return v;
}
u64 secret_of(u64 i, int w) { return mod2((i >> w) + i, w); }

u64 arith(const Words& a, const Words& b, size_t k, int w) { return mod2(a[k] + b[k], w); }

enum class HintMode { None, Public, Shared0, Shared1 };
const char* hint_name(HintMode h) {
  switch (h) {
    case HintMode::None: return "none";
    case HintMode::Public: return "public";
    case HintMode::Shared0: return "shared(m0=0)";
    case HintMode::Shared1: return "shared(m0=1)";
  }
  return "?";
}
constexpr HintMode kHints[] = {HintMode::None, HintMode::Public, HintMode::Shared0, HintMode::Shared1};

// Hint describing MSB(x) for a batch whose secrets are `sec`; shared hints split MSB as (m0, MSB ^ m0).
WrapHint make_hint(const Session& s, HintMode h, const Words& sec, int w, bool& ok) {
  ok = true;
  switch (h) {
    case HintMode::None: return WrapHint::none();
    case HintMode::Public: {
      // A public hint needs one MSB for the batch; callers split batches by MSB.
      bool b = msb_of(sec.empty() ? 0 : sec[0], w);
      for (u64 v : sec) ok &= msb_of(v, w) == b;
      return WrapHint::msb_public(b);
    }
    case HintMode::Shared0:
    case HintMode::Shared1: {
      const uint8_t m0 = h == HintMode::Shared1;
      Bits sh(sec.size());
      for (size_t i = 0; i < sec.size(); ++i) sh[i] = s.role() == 0 ? m0 : static_cast<uint8_t>(msb_of(sec[i], w) ^ m0);
      return WrapHint::msb_shared(std::move(sh));
    }
  }
  return {};
}

// Cases for a single w-bit operand. Public hints enumerate the two MSB halves separately.
struct Space {
  u64 n;
  std::function<u64(u64)> index;  // case -> split index
};
Space space_for(int w, HintMode h, bool msb) {
  const u64 all = pow2(2 * w);
  if (h != HintMode::Public) return {all, [](u64 i) { return i; }};
  // Enumerate x1 freely and x0 so that the secret has the required MSB.
  const u64 half = pow2(w - 1);
  return {all / 2, [w, half, msb](u64 c) {
            u64 x1 = mod2(c, w), t = c >> w;
            u64 sec = (msb ? half : 0) + t;
            u64 x0 = mod2(sec - x1, w);
            return (x0 << w) | x1;
          }};
}

void single_operand_suites(Suite& su, Pair& pr, int max_bits) {
  for (int w = 1; w <= max_bits; ++w) {
    for (HintMode hm : kHints) {
      for (int mb = 0; mb < (hm == HintMode::Public ? 2 : 1); ++mb) {
        Space sp = space_for(w, hm, mb);
        auto shares = [&](const Session& s, u64 lo, u64 hi, Words& own, Words& sec) {
          own.resize(hi - lo);
          sec.resize(hi - lo);
          for (u64 c = lo; c < hi; ++c) {
            u64 i = sp.index(c);
            own[c - lo] = s.role() == 0 ? i >> w : mod2(i, w);
            sec[c - lo] = secret_of(i, w);
          }
        };
        auto sec_at = [&](u64 c) { return secret_of(sp.index(c), w); };
        const std::string hp = std::string(" hint=") + hint_name(hm) + (hm == HintMode::Public ? (mb ? "(1)" : "(0)") : "");

        // Extensions.
        for (int n2 : {w + 1, w + 3, 2 * w + 1}) {
          if (n2 > kMaxWidth) continue;
          for (int sg = 0; sg < 2; ++sg) {
            drive(
                pr, sp.n,
                [&](Session& s, u64 lo, u64 hi) {
                  Words own, sec;
                  shares(s, lo, hi, own, sec);
                  bool ok;
                  WrapHint h = make_hint(s, hm, sec, w, ok);
                  AShare x(w, own);
                  return (sg ? sxt(s, x, n2, h) : zxt(s, x, n2, h)).v;
                },
                [&](u64 c, size_t k, const Words& a, const Words& b, size_t) {
                  u64 x = sec_at(c);
                  u64 want = sg ? ref::sext(x, w, n2) : x;
                  return arith(a, b, k, n2) == want;
                },
                su.at(sg ? "SXt" : "ZXt"), "w=" + std::to_string(w) + " n=" + std::to_string(n2) + hp);
          }
        }

        if (hm != HintMode::None) {
          drive(
              pr, sp.n,
              [&](Session& s, u64 lo, u64 hi) {
                Words own, sec;
                shares(s, lo, hi, own, sec);
                bool ok;
                WrapHint h = make_hint(s, hm, sec, w, ok);
                Bits r = msb_to_wrap(s, AShare(w, own), h);
                return Words(r.begin(), r.end());
              },
              [&](u64 c, size_t k, const Words& a, const Words& b, size_t) {
                u64 i = sp.index(c);
                return ((a[k] ^ b[k]) & 1) == static_cast<u64>(ref::wrap(i >> w, mod2(i, w), w));
              },
              su.at("MSBtoWrap"), "w=" + std::to_string(w) + hp);
        }

        for (int sh = 1; sh < w; ++sh) {
          for (int ar = 0; ar < 2; ++ar) {
            drive(
                pr, sp.n,
                [&](Session& s, u64 lo, u64 hi) {
                  Words own, sec;
                  shares(s, lo, hi, own, sec);
                  bool ok;
                  WrapHint h = make_hint(s, hm, sec, w, ok);
                  AShare x(w, own);
                  return (ar ? ars(s, x, sh, h) : lrs(s, x, sh, h)).v;
                },
                [&](u64 c, size_t k, const Words& a, const Words& b, size_t) {
                  u64 x = sec_at(c);
                  return arith(a, b, k, w) == (ar ? ref::ars(x, w, sh) : ref::lrs(x, w, sh));
                },
                su.at(ar ? "ARS" : "LRS"), "w=" + std::to_string(w) + " s=" + std::to_string(sh) + hp);
          }
          if (hm == HintMode::None) {
            drive(
                pr, sp.n,
                [&](Session& s, u64 lo, u64 hi) { return tr(s, AShare(w, own_split(s, lo, hi, w)), sh).v; },
                [&](u64 c, size_t k, const Words& a, const Words& b, size_t) {
                  return arith(a, b, k, w - sh) == ref::tr(secret_of(c, w), w, sh);
                },
                su.at("TR"), "w=" + std::to_string(w) + " s=" + std::to_string(sh));
            drive(
                pr, sp.n,
                [&](Session& s, u64 lo, u64 hi) { return div_pow2(s, AShare(w, own_split(s, lo, hi, w)), sh).v; },
                [&](u64 c, size_t k, const Words& a, const Words& b, size_t) {
                  return arith(a, b, k, w) == ref::c_div_pow2(secret_of(c, w), w, sh);
                },
                su.at("DivPow2"), "w=" + std::to_string(w) + " s=" + std::to_string(sh));
          }
        }
      }
    }
  }
}

void digit_suites(Suite& su, Pair& pr, int max_bits) {
  for (int w = 1; w <= max_bits; ++w) {
    // Every composition of w: bit j of `cuts` places a digit boundary after bit j + 1.
    for (u64 cuts = 0; cuts < pow2(w - 1); ++cuts) {
      std::vector<int> sizes;
      int run = 1;
      for (int j = 0; j < w - 1; ++j) {
        if ((cuts >> j) & 1) {
          sizes.push_back(run);
          run = 0;
        }
        ++run;
      }
      sizes.push_back(run);
      std::ostringstream ps;
      ps << "w=" << w << " digits=";
      for (size_t a = 0; a < sizes.size(); ++a) ps << (a ? "," : "") << sizes[a];
      drive(
          pr, pow2(2 * w),
          [&](Session& s, u64 lo, u64 hi) {
            auto z = digdec(s, AShare(w, own_split(s, lo, hi, w)), sizes);
            Words out;
            for (auto& d : z) out.insert(out.end(), d.v.begin(), d.v.end());
            return out;
          },
          [&](u64 c, size_t k, const Words& a, const Words& b, size_t n) {
            u64 got = 0;
            int off = 0;
            for (size_t d = 0; d < sizes.size(); ++d) {
              got |= mod2(a[d * n + k] + b[d * n + k], sizes[d]) << off;
              off += sizes[d];
            }
            return got == secret_of(c, w);
          },
          su.at("DigDec"), ps.str());
    }
  }
  for (int w = 2; w <= max_bits; w *= 2) {
    for (int d = 1; d <= w; ++d) {
      drive(
          pr, pow2(2 * w),
          [&](Session& s, u64 lo, u64 hi) { return msnzb(s, AShare(w, own_split(s, lo, hi, w)), d); },
          [&](u64 c, size_t k, const Words& a, const Words& b, size_t) {
            return (a[k] ^ b[k]) == pow2(ref::msnzb(secret_of(c, w)));
          },
          su.at("MSNZB"), "w=" + std::to_string(w) + " d=" + std::to_string(d));
    }
  }
}

// Case i enumerates (x0, x1, y0, y1), x fields m bits and y fields n bits.
struct TwoOp {
  int m, n;
  u64 count() const { return pow2(2 * m + 2 * n); }
  u64 x(u64 i) const { return mod2((i >> (2 * n + m)) + (i >> (2 * n)), m); }
  u64 y(u64 i) const { return mod2((i >> n) + i, n); }
  Words own_x(const Session& s, u64 lo, u64 hi) const {
    Words v(hi - lo);
    for (u64 i = lo; i < hi; ++i) v[i - lo] = s.role() == 0 ? mod2(i >> (2 * n + m), m) : mod2(i >> (2 * n), m);
    return v;
  }
  Words own_y(const Session& s, u64 lo, u64 hi) const {
    Words v(hi - lo);
    for (u64 i = lo; i < hi; ++i) v[i - lo] = s.role() == 0 ? mod2(i >> n, n) : mod2(i, n);
    return v;
  }
};

void mult_suites(Suite& su, Pair& pr, int max_bits) {
  for (int m = 1; m <= max_bits; ++m) {
    for (int n = 1; n <= max_bits; ++n) {
      const TwoOp op{m, n};
      const bool big = m + n > 8;
      std::vector<int> widths;
      if (big) {
        widths = {std::max(m, n) + 1, m + n};
      } else {
        for (int l = 1; l <= m + n; ++l) widths.push_back(l);
      }
      for (int l : widths) {
        const std::string ps = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " l=" + std::to_string(l);
        // Hints are only exercised at small widths; shared hints need a split per case.
        for (int hk = 0; hk < (big ? 1 : 2); ++hk) {
          auto hints = [&](const Session& s, u64 lo, u64 hi, WrapHint& hx, WrapHint& hy) {
            if (!hk) return;
            Bits bx(hi - lo), by(hi - lo);
            for (u64 i = lo; i < hi; ++i) {
              uint8_t r = static_cast<uint8_t>((i * 0x9e3779b97f4a7c15ULL) >> 63);
              bx[i - lo] = s.role() == 0 ? r : static_cast<uint8_t>(msb_of(op.x(i), m) ^ r);
              by[i - lo] = s.role() == 0 ? r : static_cast<uint8_t>(msb_of(op.y(i), n) ^ r);
            }
            hx = WrapHint::msb_shared(std::move(bx));
            hy = WrapHint::msb_shared(std::move(by));
          };
          const std::string hp = ps + (hk ? " hint=shared" : "");
          drive(
              pr, op.count(),
              [&](Session& s, u64 lo, u64 hi) {
                WrapHint hx, hy;
                hints(s, lo, hi, hx, hy);
                return umult(s, AShare(m, op.own_x(s, lo, hi)), AShare(n, op.own_y(s, lo, hi)), l, hx, hy).v;
              },
              [&](u64 i, size_t k, const Words& a, const Words& b, size_t) {
                return arith(a, b, k, l) == ref::umul(op.x(i), op.y(i), l);
              },
              su.at("UMult"), hp);
          drive(
              pr, op.count(),
              [&](Session& s, u64 lo, u64 hi) {
                WrapHint hx, hy;
                hints(s, lo, hi, hx, hy);
                return smult(s, AShare(m, op.own_x(s, lo, hi)), AShare(n, op.own_y(s, lo, hi)), l, hx, hy).v;
              },
              [&](u64 i, size_t k, const Words& a, const Words& b, size_t) {
                return arith(a, b, k, l) == ref::smul(op.x(i), m, op.y(i), n, l);
              },
              su.at("SMult"), hp);
        }
        if (!big)
          for (int sh = 1; sh < l; ++sh)
            drive(
                pr, op.count(),
                [&](Session& s, u64 lo, u64 hi) {
                  return smult_tr(s, AShare(m, op.own_x(s, lo, hi)), AShare(n, op.own_y(s, lo, hi)), l, sh).v;
                },
                [&](u64 i, size_t k, const Words& a, const Words& b, size_t) {
                  return arith(a, b, k, l - sh) == ref::tr(ref::smul(op.x(i), m, op.y(i), n, l), l, sh);
                },
                su.at("MultTR"), ps + " s=" + std::to_string(sh));
      }
      // Cross term: x wholly held by P0, y wholly held by P1; every pair of values.
      for (int l : widths) {
        drive(
            pr, pow2(m + n),
            [&](Session& s, u64 lo, u64 hi) {
              Words mine(hi - lo);
              for (u64 i = lo; i < hi; ++i) mine[i - lo] = s.role() == 0 ? i >> n : mod2(i, n);
              return cross_mult(s, mine, m, n, l).v;
            },
            [&](u64 i, size_t k, const Words& a, const Words& b, size_t) {
              return arith(a, b, k, l) == mod2((i >> n) * mod2(i, n), l);
            },
            su.at("CrossMult"), "m=" + std::to_string(m) + " n=" + std::to_string(n) + " l=" + std::to_string(l));
      }
    }
  }
}

Matrix random_matrix(std::mt19937_64& rng, int r, int c, int w) {
  Matrix a(r, c, w);
  for (auto& v : a.elems) v = mod2(rng(), w);
  return a;
}

void matrix_suites(Suite& su, Pair& pr, int max_bits, u64 seed) {
  // A 4x1 column holding every split of a bit times a 1 x 4^w row holding every split of a value.
  for (int w = 1; w <= max_bits; ++w) {
    Tally& t = su.at("BitMatMul");
    const u64 k = pow2(2 * w);
    Words o0, o1;
    run_pair(pr.s0, pr.s1, [&](Session& s) {
      Bits col(4);
      for (int r = 0; r < 4; ++r) col[r] = static_cast<uint8_t>(s.role() == 0 ? r >> 1 : r & 1);
      AMatrix x{1, static_cast<int>(k), AShare(w, own_split(s, 0, k, w))};
      (s.role() ? o1 : o0) = bitmat_mul(s, col, 4, 1, x).a.v;
    });
    for (int r = 0; r < 4; ++r)
      for (u64 i = 0; i < k; ++i) {
        ++t.cases;
        const u64 bit = (r >> 1) ^ (r & 1);
        if (mod2(o0[r * k + i] + o1[r * k + i], w) != bit * secret_of(i, w) && t.bad++ == 0)
          t.first = "4x1x" + std::to_string(k) + " w=" + std::to_string(w);
      }
  }

  std::mt19937_64 rng(seed);
  auto split = [&](const Matrix& a, Matrix& a0, Matrix& a1) {
    a0 = random_matrix(rng, a.rows, a.cols, a.width);
    a1 = a;
    for (size_t i = 0; i < a.elems.size(); ++i) a1.elems[i] = mod2(a.elems[i] - a0.elems[i], a.width);
  };
  struct Dims {
    int d1, d2, d3;
  };
  for (Dims d : {Dims{2, 3, 2}, Dims{3, 2, 4}}) {
    Tally& t = su.at("BitMatMul");
    for (int trial = 0; trial < 200; ++trial) {
      const int w = 8;
      Matrix wm = random_matrix(rng, d.d1, d.d2, 1), x = random_matrix(rng, d.d2, d.d3, w), w0, w1, x0, x1;
      split(wm, w0, w1);
      split(x, x0, x1);
      Words o0, o1;
      run_pair(pr.s0, pr.s1, [&](Session& s) {
        const Matrix& wb = s.role() ? w1 : w0;
        const Matrix& xb = s.role() ? x1 : x0;
        Bits bits(wb.elems.begin(), wb.elems.end());
        AMatrix z = bitmat_mul(s, bits, d.d1, d.d2, AMatrix{d.d2, d.d3, AShare(w, xb.elems)});
        (s.role() ? o1 : o0) = z.a.v;
      });
      Matrix want = matmul_ref(wm, x, w);
      for (size_t i = 0; i < want.elems.size(); ++i) {
        ++t.cases;
        if (mod2(o0[i] + o1[i], w) != want.elems[i] && t.bad++ == 0) t.first = "random bit-matrix product";
      }
    }
  }

  struct MM {
    int d1, d2, d3, m, n;
  };
  for (MM c : {MM{3, 4, 2, 8, 8}, MM{4, 4, 4, 8, 8}, MM{3, 4, 2, 8, 6}, MM{2, 3, 3, 5, 8}}) {
    Tally& t = su.at("MatMul");
    int e = 0;
    while ((1 << e) < c.d2) ++e;
    const int lw = c.m + c.n + e;
    for (int trial = 0; trial < 200; ++trial) {
      Matrix x = random_matrix(rng, c.d1, c.d2, c.m), y = random_matrix(rng, c.d2, c.d3, c.n), x0, x1, y0, y1;
      split(x, x0, x1);
      split(y, y0, y1);
      Words o0, o1;
      run_pair(pr.s0, pr.s1, [&](Session& s) {
        const Matrix& xb = s.role() ? x1 : x0;
        const Matrix& yb = s.role() ? y1 : y0;
        AMatrix z = matmul(s, AMatrix{c.d1, c.d2, AShare(c.m, xb.elems)}, AMatrix{c.d2, c.d3, AShare(c.n, yb.elems)});
        (s.role() ? o1 : o0) = z.a.v;
      });
      Matrix want = matmul_ref(x, y, lw);
      for (size_t i = 0; i < want.elems.size(); ++i) {
        ++t.cases;
        if (mod2(o0[i] + o1[i], lw) != want.elems[i] && t.bad++ == 0) {
          std::ostringstream os;
          os << c.d1 << "x" << c.d2 << "x" << c.d3 << " m=" << c.m << " n=" << c.n << " trial " << trial;
          t.first = os.str();
        }
      }
    }
  }
}

Report to_report(const Suite& su, const std::string& suite, const std::map<std::string, std::string>& params) {
  Report rep;
  for (auto& name : su.order) {
    const Tally& t = su.by_name.at(name);
    Row row;
    row.suite = suite;
    row.name = name;
    auto it = params.find(name);
    row.params = it == params.end() ? "" : it->second;
    row.source = "ring reference";
    row.cases = t.cases;
    row.mismatches = t.bad;
    row.seconds = t.seconds;
    row.note = t.first;
    row.pass = t.bad == 0 && t.cases > 0;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace

Report cmd_equiv_blocks(const BlockScope& scope) {
  Pair pr(scope.seed);
  Suite su;
  single_operand_suites(su, pr, scope.max_bits);
  digit_suites(su, pr, scope.max_bits);
  mult_suites(su, pr, scope.max_mult_bits);
  matrix_suites(su, pr, scope.max_bits, scope.seed);
  const std::string all = "w<=" + std::to_string(scope.max_bits) + ", all splits";
  const std::string mult = "m,n<=" + std::to_string(scope.max_mult_bits) + ", all splits";
  std::map<std::string, std::string> params{
      {"ZXt", all},   {"SXt", all},          {"MSBtoWrap", all},
      {"LRS", all},   {"ARS", all},          {"TR", all},
      {"DivPow2", all}, {"DigDec", all + ", all digitizations"}, {"MSNZB", "w=2^k<=" + std::to_string(scope.max_bits) + ", all d, all splits"},
      {"UMult", mult}, {"SMult", mult},       {"MultTR", "m+n<=8, all splits"},
      {"CrossMult", mult + ", all values"}, {"BitMatMul", "4x1 by 1x4^w, " + all + " + random"},
      {"MatMul", "random 3x4x2, 4x4x4 (m=n=8) + mixed widths"}};
  Report rep = to_report(su, "blocks", params);
  rep.seed = scope.seed;
  return rep;
}

// wrap(x0, x1, 2^w) = d ^ (c & e) over every split and every s in [1, w).
Report wrap_split_check(int max_bits) {
  Report rep;
  Row row;
  row.suite = "wrap";
  row.name = "wrap-split";
  row.params = "w<=" + std::to_string(max_bits) + ", all s, all splits";
  row.source = "definition";
  u64 cases = 0, bad = 0;
  for (int w = 2; w <= max_bits; ++w)
    for (int s = 1; s < w; ++s)
      for (u64 x0 = 0; x0 < pow2(w); ++x0)
        for (u64 x1 = 0; x1 < pow2(w); ++x1) {
          ++cases;
          const u64 lo = (x0 & mask(s)) + (x1 & mask(s));
          const u64 hi = (x0 >> s) + (x1 >> s);
          const bool c = lo >= pow2(s);
          const bool d = hi >= pow2(w - s);
          const bool e = (hi & mask(w - s)) == mask(w - s);
          const bool wrap = x0 + x1 >= pow2(w);
          const WrapSplit ws = split_wrap(x0, x1, w, s);
          if (wrap != (d != (c && e)) || ws.c != c || ws.d != d || ws.e != e) ++bad;
        }
  row.cases = cases;
  row.mismatches = bad;
  row.pass = bad == 0;
  rep.rows.push_back(row);
  return rep;
}

Row math_equiv(MathFn f, int sx, int sy, int bits, u64 samples, u64 seed) {
  const MathParams p = default_params(f, sx, sy, bits);
  Words xs;
  if (samples == 0) {
    for (u64 x = 0; x < pow2(bits); ++x)
      if (in_domain(f, x, sx, bits)) xs.push_back(x);
  } else {
    std::mt19937_64 rng(seed ^ (static_cast<u64>(sx) << 8) ^ static_cast<u64>(sy) ^ (static_cast<u64>(f) << 16));
    while (xs.size() < samples) {
      u64 x = mod2(rng(), bits);
      if (in_domain(f, x, sx, bits)) xs.push_back(x);
    }
  }
  std::mt19937_64 rng(seed * 31 + 7);
  Words x0(xs.size()), x1(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    x0[i] = mod2(rng(), bits);
    x1[i] = mod2(xs[i] - x0[i], bits);
  }
  Pair pr(seed);
  Tally t;
  drive(
      pr, xs.size(),
      [&](Session& s, u64 lo, u64 hi) {
        const Words& mine = s.role() == 0 ? x0 : x1;
        AShare x(bits, Words(mine.begin() + lo, mine.begin() + hi));
        return secure_eval(s, f, x, p).v;
      },
      [&](u64 i, size_t k, const Words& a, const Words& b, size_t) {
        return arith(a, b, k, p.n) == reference(f, xs[i], p);
      },
      t, fn_name(f));
  Row row;
  row.suite = "math";
  row.name = fn_name(f);
  std::ostringstream ps;
  ps << "sx=" << sx << " sy=" << sy << (samples ? " random" : " exhaustive");
  row.params = ps.str();
  row.source = "cleartext reference";
  row.cases = t.cases;
  row.mismatches = t.bad;
  row.seconds = t.seconds;
  row.note = t.first;
  row.pass = t.bad == 0 && t.cases > 0;
  return row;
}

Report cmd_equiv_math(const std::vector<MathFn>& fns, u64 samples, u64 seed, bool exhaustive_default_pair) {
  Report rep;
  rep.seed = seed;
  for (MathFn f : fns) {
    const auto pp = default_pair(f);
    for (auto [sx, sy] : ulp_grid(f)) {
      const bool full = exhaustive_default_pair && sx == pp.first && sy == pp.second;
      rep.rows.push_back(math_equiv(f, sx, sy, 16, full ? 0 : samples, seed));
    }
  }
  return rep;
}

}  // namespace fx
