#pragma once

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fxmpc/ring.hpp"

namespace fx {

struct TransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegotiationError : TransportError {
  using TransportError::TransportError;
};

// Packed bit string. Values are appended LSB first.
class BitBuf {
 public:
  BitBuf() = default;
  explicit BitBuf(size_t reserve_bits) { w_.reserve((reserve_bits + 63) / 64); }

  void put(u64 v, int bits);
  void put_bit(bool b) { put(b ? 1 : 0, 1); }
  u64 get(size_t offset, int bits) const;
  bool bit(size_t offset) const { return (w_[offset >> 6] >> (offset & 63)) & 1; }
  size_t bits() const { return n_; }

  std::vector<uint8_t> to_bytes() const;
  static BitBuf from_bytes(const uint8_t* p, size_t bits);

  const std::vector<u64>& words() const { return w_; }
  static BitBuf from_words(std::vector<u64> w, size_t bits);

 private:
  std::vector<u64> w_;
  size_t n_ = 0;
};

// Sequential reader over a BitBuf.
class BitReader {
 public:
  explicit BitReader(const BitBuf& b) : b_(b) {}
  u64 take(int bits) {
    u64 v = b_.get(pos_, bits);
    pos_ += bits;
    return v;
  }
  bool take_bit() { return b_.bit(pos_++); }
  size_t pos() const { return pos_; }
  void skip(size_t bits) { pos_ += bits; }

 private:
  const BitBuf& b_;
  size_t pos_ = 0;
};

struct Frame {
  uint16_t label = 0;
  BitBuf payload;
};

class Channel {
 public:
  virtual ~Channel() = default;
  virtual void send(Frame f) = 0;
  virtual Frame recv() = 0;
  virtual void close() = 0;
};

std::pair<std::unique_ptr<Channel>, std::unique_ptr<Channel>> make_inproc_channels();
std::unique_ptr<Channel> tcp_listen(int port);
std::unique_ptr<Channel> tcp_connect(const std::string& host, int port, int retry_ms = 10000);

enum class Op { Send, Recv, Exchange };

struct LabelStats {
  u64 bits_sent = 0;
  u64 bits_received = 0;
  u64 rounds = 0;
  u64 total() const { return bits_sent + bits_received; }
};

// Inclusive per-label totals: a message counts toward every distinct label on the scope stack.
class CostMeter {
 public:
  CostMeter();

  void push(const std::string& label);
  void pop();
  void record(Op op, u64 sent, u64 received);
  void reset();

  u64 bits_sent() const { return root_.bits_sent; }
  u64 bits_received() const { return root_.bits_received; }
  u64 rounds() const { return root_.rounds; }
  LabelStats total() const { return root_; }
  LabelStats label(const std::string& name) const;
  const std::map<std::string, LabelStats>& labels() const { return labels_; }
  const std::string& current() const;

 private:
  struct Scope {
    std::string label;
    bool counted;
    int last;
  };
  std::vector<Scope> stack_;
  int root_last_ = -1;
  LabelStats root_;
  std::map<std::string, LabelStats> labels_;
};

struct SessionConfig {
  int role = 0;
  int lambda = 128;
  u64 seed = 1;
};

class Session {
 public:
  Session(std::unique_ptr<Channel> ch, const SessionConfig& cfg);
  Session(Session&&) = default;
  Session& operator=(Session&&) = default;
  ~Session();

  int role() const { return role_; }
  int lambda() const { return lambda_; }
  CostMeter& meter() { return meter_; }
  const CostMeter& meter() const { return meter_; }

  void send(BitBuf b);
  BitBuf recv();
  BitBuf exchange(BitBuf b);

  std::mt19937_64& rng() { return rng_; }
  u64 joint_seed() const { return joint_; }
  // Both parties draw the same sequence of batch ids.
  u64 next_batch() { return batch_++; }
  void close();

 private:
  void handshake(u64 seed);
  uint16_t label_id() const;

  std::unique_ptr<Channel> ch_;
  int role_ = 0;
  int lambda_ = 128;
  CostMeter meter_;
  std::mt19937_64 rng_;
  u64 joint_ = 0;
  u64 batch_ = 0;
};

class MeterScope {
 public:
  MeterScope(Session& s, const std::string& label) : m_(s.meter()) { m_.push(label); }
  ~MeterScope() { m_.pop(); }
  MeterScope(const MeterScope&) = delete;
  MeterScope& operator=(const MeterScope&) = delete;

 private:
  CostMeter& m_;
};

u64 mix64(u64 x);

std::pair<Session, Session> open_inproc_pair(u64 seed = 1, int lambda0 = 128, int lambda1 = 128);
Session open_tcp_session(int role, const std::string& host, int port, const SessionConfig& cfg);

// Runs both parties, P1 on a worker thread. A failure on either side closes both
// channels so the peer cannot block, then the first error is rethrown.
void run_pair(Session& s0, Session& s1, const std::function<void(Session&)>& f0,
              const std::function<void(Session&)>& f1);
void run_pair(Session& s0, Session& s1, const std::function<void(Session&)>& f);

}  // namespace fx
