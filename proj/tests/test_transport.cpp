#include <gtest/gtest.h>

#include <random>
#include <thread>
#include <unistd.h>

#include "fxmpc/transport.hpp"

using namespace fx;

namespace {

int test_port(int k) { return 20000 + (getpid() % 5000) * 4 + k; }

}  // namespace

TEST(BitBuf, PackAndUnpack) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    BitBuf b;
    std::vector<std::pair<u64, int>> items;
    for (int i = 0; i < 50; ++i) {
      int w = 1 + rng() % 64;
      u64 v = mod2(rng(), w);
      items.push_back({v, w});
      b.put(v, w);
    }
    BitBuf c = BitBuf::from_bytes(b.to_bytes().data(), b.bits());
    BitReader r(c);
    for (auto [v, w] : items) ASSERT_EQ(r.take(w), v);
    ASSERT_EQ(r.pos(), b.bits());
  }
}

TEST(Meter, LabelsAndRounds) {
  CostMeter m;
  m.push("MUX");
  m.record(Op::Send, 320, 0);
  EXPECT_EQ(m.label("MUX").total(), 320u);
  EXPECT_EQ(m.rounds(), 1u);
  m.record(Op::Send, 10, 0);
  EXPECT_EQ(m.rounds(), 1u);
  m.record(Op::Recv, 0, 10);
  EXPECT_EQ(m.rounds(), 2u);
  m.record(Op::Exchange, 5, 5);
  m.record(Op::Exchange, 5, 5);
  EXPECT_EQ(m.rounds(), 4u);
  m.push("MUX");
  m.record(Op::Send, 1, 0);
  m.pop();
  EXPECT_EQ(m.label("MUX").total(), 361u);
  m.pop();
  EXPECT_EQ(m.total().total(), 361u);
  m.reset();
  EXPECT_EQ(m.total().total(), 0u);
  EXPECT_EQ(m.rounds(), 0u);
}

TEST(Session, InprocStartsAtZeroAndMeters) {
  auto [s0, s1] = open_inproc_pair(5);
  EXPECT_EQ(s0.meter().total().total(), 0u);
  EXPECT_EQ(s1.meter().total().total(), 0u);
  EXPECT_EQ(s0.joint_seed(), s1.joint_seed());
  run_pair(s0, s1, [](Session& s) {
    MeterScope sc(s, "MUX");
    BitBuf b;
    b.put(0x1234, 320 - 256);
    for (int i = 0; i < 4; ++i) b.put(~0ULL, 64);
    if (s.role() == 0) {
      s.send(b);
    } else {
      BitBuf r = s.recv();
      EXPECT_EQ(r.bits(), 320u);
    }
  });
  EXPECT_EQ(s0.meter().label("MUX").bits_sent, 320u);
  EXPECT_EQ(s1.meter().label("MUX").bits_received, 320u);
  EXPECT_EQ(s0.meter().rounds(), 1u);
}

TEST(Session, ExchangeIsSymmetric) {
  auto [s0, s1] = open_inproc_pair(9);
  run_pair(s0, s1, [](Session& s) {
    BitBuf b;
    b.put(s.role() + 10, 16);
    BitBuf r = s.exchange(b);
    EXPECT_EQ(r.get(0, 16), static_cast<u64>(11 - s.role()));
  });
  EXPECT_EQ(s0.meter().total().total(), 32u);
  EXPECT_EQ(s1.meter().rounds(), 1u);
}

TEST(Session, LambdaMismatchIsNegotiationError) {
  EXPECT_THROW(open_inproc_pair(1, 128, 64), NegotiationError);
}

TEST(Session, TcpRoundTripAndReconnect) {
  const int port = test_port(0);
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::exception_ptr err;
    std::thread t([&] {
      try {
        SessionConfig c;
        Session s = open_tcp_session(1, "127.0.0.1", port, c);
        BitBuf r = s.recv();
        s.send(r);
        EXPECT_EQ(s.meter().total().total(), 128u);
        s.close();
      } catch (...) {
        err = std::current_exception();
      }
    });
    SessionConfig c;
    Session s = open_tcp_session(0, "127.0.0.1", port, c);
    EXPECT_EQ(s.meter().total().total(), 0u);
    BitBuf b;
    b.put(0xdeadbeefcafeULL, 64);
    s.send(b);
    EXPECT_EQ(s.recv().get(0, 64), 0xdeadbeefcafeULL);
    EXPECT_EQ(s.meter().rounds(), 2u);
    t.join();
    s.close();
    if (err) std::rethrow_exception(err);
  }
}

TEST(Session, TcpLambdaMismatch) {
  const int port = test_port(1);
  std::exception_ptr err;
  std::thread t([&] {
    try {
      SessionConfig c;
      c.lambda = 80;
      open_tcp_session(1, "127.0.0.1", port, c);
    } catch (...) {
      err = std::current_exception();
    }
  });
  SessionConfig c;
  EXPECT_THROW(open_tcp_session(0, "127.0.0.1", port, c), NegotiationError);
  t.join();
  EXPECT_TRUE(err != nullptr);
}

TEST(Session, PeerFailureUnblocks) {
  auto [s0, s1] = open_inproc_pair(2);
  EXPECT_THROW(run_pair(
                   s0, s1, [](Session&) { throw std::runtime_error("boom"); },
                   [](Session& s) { s.recv(); }),
               std::runtime_error);
}
