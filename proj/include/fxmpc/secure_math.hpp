#pragma once

#include "fxmpc/blocks.hpp"
#include "fxmpc/cleartext.hpp"

namespace fx {

// Each function matches its cleartext counterpart bit for bit on valid inputs.
AShare sec_exp(Session& s, const AShare& x, const MathParams& p);
// v in [2^s, 2^{s+1}] at width l; output at width l.
AShare sec_recip(Session& s, const AShare& v, int l, int sh, int g, int t);
AShare sec_h(Session& s, const AShare& x, const MathParams& p);
AShare sec_sigmoid(Session& s, const AShare& x, const MathParams& p);
AShare sec_tanh(Session& s, const AShare& x, const MathParams& p);
AShare sec_rsqrt(Session& s, const AShare& x, const MathParams& p);

AShare secure_eval(Session& s, MathFn f, const AShare& x, const MathParams& p);

}  // namespace fx
