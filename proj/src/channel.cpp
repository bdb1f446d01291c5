#include <condition_variable>
#include <cstring>
#include <deque>
#include <mutex>

#include "fxmpc/transport.hpp"

namespace fx {

void BitBuf::put(u64 v, int bits) {
  if (bits == 0) return;
  v = mod2(v, bits);
  size_t off = n_ & 63;
  if (off == 0) w_.push_back(0);
  w_.back() |= v << off;
  if (off + bits > 64) w_.push_back(v >> (64 - off));
  n_ += bits;
}

u64 BitBuf::get(size_t offset, int bits) const {
  if (bits == 0) return 0;
  require(offset + bits <= n_, "bit buffer read past end");
  size_t i = offset >> 6, off = offset & 63;
  u64 v = w_[i] >> off;
  if (off + bits > 64) v |= w_[i + 1] << (64 - off);
  return mod2(v, bits);
}

std::vector<uint8_t> BitBuf::to_bytes() const {
  std::vector<uint8_t> out((n_ + 7) / 8);
  if (!out.empty()) std::memcpy(out.data(), w_.data(), out.size());
  return out;
}

BitBuf BitBuf::from_bytes(const uint8_t* p, size_t bits) {
  BitBuf b;
  b.w_.assign((bits + 63) / 64, 0);
  if (bits) std::memcpy(b.w_.data(), p, (bits + 7) / 8);
  b.n_ = bits;
  if (bits & 63) b.w_.back() &= mask(bits & 63);
  return b;
}

BitBuf BitBuf::from_words(std::vector<u64> w, size_t bits) {
  require(w.size() == (bits + 63) / 64, "word count does not match bit length");
  BitBuf b;
  b.w_ = std::move(w);
  b.n_ = bits;
  return b;
}

namespace {

struct Queue {
  std::deque<Frame> q;
  bool closed = false;
};

struct Shared {
  std::mutex mu;
  std::condition_variable cv;
  Queue dir[2];
};

class InprocChannel : public Channel {
 public:
  InprocChannel(std::shared_ptr<Shared> sh, int side) : sh_(std::move(sh)), side_(side) {}
  ~InprocChannel() override { close(); }

  void send(Frame f) override {
    std::lock_guard<std::mutex> lk(sh_->mu);
    Queue& out = sh_->dir[side_];
    if (out.closed || sh_->dir[1 - side_].closed) throw TransportError("peer closed");
    out.q.push_back(std::move(f));
    sh_->cv.notify_all();
  }

  Frame recv() override {
    std::unique_lock<std::mutex> lk(sh_->mu);
    Queue& in = sh_->dir[1 - side_];
    sh_->cv.wait(lk, [&] { return !in.q.empty() || in.closed || sh_->dir[side_].closed; });
    if (in.q.empty()) throw TransportError("peer closed");
    Frame f = std::move(in.q.front());
    in.q.pop_front();
    return f;
  }

  void close() override {
    std::lock_guard<std::mutex> lk(sh_->mu);
    sh_->dir[side_].closed = true;
    sh_->cv.notify_all();
  }

 private:
  std::shared_ptr<Shared> sh_;
  int side_;
};

}  // namespace

std::pair<std::unique_ptr<Channel>, std::unique_ptr<Channel>> make_inproc_channels() {
  auto sh = std::make_shared<Shared>();
  return {std::make_unique<InprocChannel>(sh, 0), std::make_unique<InprocChannel>(sh, 1)};
}

}  // namespace fx
