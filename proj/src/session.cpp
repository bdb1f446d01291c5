#include <exception>
#include <thread>

#include "fxmpc/transport.hpp"

namespace fx {

namespace {

constexpr uint32_t kMagic = 0x504d5846;  // "FXMP"
constexpr uint16_t kVersion = 1;

uint16_t fnv16(const std::string& s) {
  uint32_t h = 2166136261u;
  for (unsigned char c : s) h = (h ^ c) * 16777619u;
  return static_cast<uint16_t>(h ^ (h >> 16));
}

}  // namespace

u64 mix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Session::Session(std::unique_ptr<Channel> ch, const SessionConfig& cfg)
    : ch_(std::move(ch)), role_(cfg.role), lambda_(cfg.lambda) {
  require(role_ == 0 || role_ == 1, "role must be 0 or 1");
  require(lambda_ > 0 && lambda_ <= 1024, "lambda out of range");
  u64 local = mix64(cfg.seed * 2 + static_cast<u64>(role_));
  rng_.seed(local);
  handshake(local);
  meter_.reset();
}

Session::~Session() {
  if (ch_) ch_->close();
}

uint16_t Session::label_id() const { return fnv16(meter_.current()); }

// Hello (magic, version, lambda, commitment), then the seed reveal.
// The commitment binds the seed; it is not hiding, which the simulated OT layer does not need.
void Session::handshake(u64 seed) {
  BitBuf hello;
  hello.put(kMagic, 32);
  hello.put(kVersion, 16);
  hello.put(static_cast<u64>(lambda_), 16);
  hello.put(mix64(seed ^ 0x636f6d6d6974ULL), 64);
  ch_->send({0, hello});
  Frame f = ch_->recv();
  BitReader r(f.payload);
  if (f.payload.bits() != 128) throw NegotiationError("malformed handshake");
  if (r.take(32) != kMagic) throw NegotiationError("bad magic");
  if (r.take(16) != kVersion) throw NegotiationError("protocol version mismatch");
  u64 peer_lambda = r.take(16);
  u64 peer_commit = r.take(64);
  if (peer_lambda != static_cast<u64>(lambda_))
    throw NegotiationError("lambda mismatch: " + std::to_string(lambda_) + " vs " +
                           std::to_string(peer_lambda));
  BitBuf reveal;
  reveal.put(seed, 64);
  ch_->send({0, reveal});
  Frame g = ch_->recv();
  if (g.payload.bits() != 64) throw NegotiationError("malformed seed reveal");
  u64 peer_seed = g.payload.get(0, 64);
  if (mix64(peer_seed ^ 0x636f6d6d6974ULL) != peer_commit)
    throw NegotiationError("seed does not match commitment");
  u64 s0 = role_ == 0 ? seed : peer_seed, s1 = role_ == 0 ? peer_seed : seed;
  joint_ = mix64(mix64(s0) ^ (s1 * 0x9e3779b97f4a7c15ULL));
}

void Session::send(BitBuf b) {
  meter_.record(Op::Send, b.bits(), 0);
  ch_->send({label_id(), std::move(b)});
}

BitBuf Session::recv() {
  Frame f = ch_->recv();
  if (f.label != label_id()) throw TransportError("frame label mismatch under '" + meter_.current() + "'");
  meter_.record(Op::Recv, 0, f.payload.bits());
  return std::move(f.payload);
}

BitBuf Session::exchange(BitBuf b) {
  u64 sent = b.bits();
  ch_->send({label_id(), std::move(b)});
  Frame f = ch_->recv();
  if (f.label != label_id()) throw TransportError("frame label mismatch under '" + meter_.current() + "'");
  meter_.record(Op::Exchange, sent, f.payload.bits());
  return std::move(f.payload);
}

void Session::close() {
  if (ch_) ch_->close();
}

std::pair<Session, Session> open_inproc_pair(u64 seed, int lambda0, int lambda1) {
  auto [c0, c1] = make_inproc_channels();
  std::exception_ptr err;
  std::unique_ptr<Session> s1;
  std::thread t([&, ch = std::move(c1)]() mutable {
    try {
      s1 = std::make_unique<Session>(std::move(ch), SessionConfig{1, lambda1, seed});
    } catch (...) {
      err = std::current_exception();
    }
  });
  std::unique_ptr<Session> s0;
  std::exception_ptr err0;
  try {
    s0 = std::make_unique<Session>(std::move(c0), SessionConfig{0, lambda0, seed});
  } catch (...) {
    err0 = std::current_exception();
  }
  t.join();
  if (err0) std::rethrow_exception(err0);
  if (err) std::rethrow_exception(err);
  return {std::move(*s0), std::move(*s1)};
}

Session open_tcp_session(int role, const std::string& host, int port, const SessionConfig& cfg) {
  SessionConfig c = cfg;
  c.role = role;
  auto ch = role == 0 ? tcp_listen(port) : tcp_connect(host, port);
  return Session(std::move(ch), c);
}

void run_pair(Session& s0, Session& s1, const std::function<void(Session&)>& f0,
              const std::function<void(Session&)>& f1) {
  std::exception_ptr e0, e1;
  std::thread t([&] {
    try {
      f1(s1);
    } catch (...) {
      e1 = std::current_exception();
      s1.close();
    }
  });
  try {
    f0(s0);
  } catch (...) {
    e0 = std::current_exception();
    s0.close();
  }
  t.join();
  auto is_transport = [](std::exception_ptr e) {
    try {
      std::rethrow_exception(e);
    } catch (const TransportError&) {
      return true;
    } catch (...) {
      return false;
    }
  };
  if (e0 && e1 && is_transport(e0) && !is_transport(e1)) std::rethrow_exception(e1);
  if (e0) std::rethrow_exception(e0);
  if (e1) std::rethrow_exception(e1);
}

void run_pair(Session& s0, Session& s1, const std::function<void(Session&)>& f) {
  run_pair(s0, s1, f, f);
}

}  // namespace fx
