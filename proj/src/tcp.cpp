#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <mutex>
#include <thread>

#include "fxmpc/transport.hpp"

namespace fx {

namespace {

void write_all(int fd, const uint8_t* p, size_t n) {
  while (n > 0) {
    ssize_t k = ::send(fd, p, n, MSG_NOSIGNAL);
    if (k < 0 && errno == EINTR) continue;
    if (k <= 0) throw TransportError(std::string("tcp send failed: ") + std::strerror(errno));
    p += k;
    n -= static_cast<size_t>(k);
  }
}

void read_all(int fd, uint8_t* p, size_t n) {
  while (n > 0) {
    ssize_t k = ::recv(fd, p, n, 0);
    if (k < 0 && errno == EINTR) continue;
    if (k == 0) throw TransportError("peer closed");
    if (k < 0) throw TransportError(std::string("tcp recv failed: ") + std::strerror(errno));
    p += k;
    n -= static_cast<size_t>(k);
  }
}

void set_nodelay(int fd) {
  int one = 1;
  setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
}

// Wire frame: u32 payload length in bits, u16 label id, then ceil(bits/8) bytes.
class TcpChannel : public Channel {
 public:
  explicit TcpChannel(int fd) : fd_(fd), writer_([this] { write_loop(); }) { set_nodelay(fd_); }
  ~TcpChannel() override {
    close();
    if (writer_.joinable()) writer_.join();
    if (fd_ >= 0) ::close(fd_);
  }

  void send(Frame f) override {
    require(f.payload.bits() < (1ULL << 32), "frame exceeds 2^32 bits");
    std::vector<uint8_t> bytes = f.payload.to_bytes();
    std::vector<uint8_t> buf(6 + bytes.size());
    uint32_t bits = static_cast<uint32_t>(f.payload.bits());
    for (int i = 0; i < 4; ++i) buf[i] = static_cast<uint8_t>(bits >> (8 * i));
    buf[4] = static_cast<uint8_t>(f.label);
    buf[5] = static_cast<uint8_t>(f.label >> 8);
    if (!bytes.empty()) std::memcpy(buf.data() + 6, bytes.data(), bytes.size());
    std::lock_guard<std::mutex> lk(mu_);
    if (!error_.empty()) throw TransportError(error_);
    if (closed_) throw TransportError("channel closed");
    out_.push_back(std::move(buf));
    cv_.notify_all();
  }

  Frame recv() override {
    uint8_t hdr[6];
    read_all(fd_, hdr, 6);
    uint32_t bits = 0;
    for (int i = 0; i < 4; ++i) bits |= static_cast<uint32_t>(hdr[i]) << (8 * i);
    Frame f;
    f.label = static_cast<uint16_t>(hdr[4] | (hdr[5] << 8));
    std::vector<uint8_t> body((bits + 7) / 8);
    if (!body.empty()) read_all(fd_, body.data(), body.size());
    f.payload = BitBuf::from_bytes(body.data(), bits);
    return f;
  }

  void close() override {
    std::unique_lock<std::mutex> lk(mu_);
    if (closed_) return;
    closed_ = true;
    cv_.notify_all();
    cv_.wait(lk, [&] { return out_.empty() || !error_.empty(); });
    lk.unlock();
    ::shutdown(fd_, SHUT_WR);
  }

 private:
  void write_loop() {
    for (;;) {
      std::vector<uint8_t> buf;
      {
        std::unique_lock<std::mutex> lk(mu_);
        cv_.wait(lk, [&] { return !out_.empty() || closed_; });
        if (out_.empty()) return;
        buf = std::move(out_.front());
      }
      try {
        write_all(fd_, buf.data(), buf.size());
      } catch (const TransportError& e) {
        std::lock_guard<std::mutex> lk(mu_);
        error_ = e.what();
        out_.clear();
        cv_.notify_all();
        return;
      }
      std::lock_guard<std::mutex> lk(mu_);
      out_.pop_front();
      cv_.notify_all();
    }
  }

  int fd_;
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<std::vector<uint8_t>> out_;
  bool closed_ = false;
  std::string error_;
  std::thread writer_;
};

}  // namespace

std::unique_ptr<Channel> tcp_listen(int port) {
  int ls = ::socket(AF_INET, SOCK_STREAM, 0);
  if (ls < 0) throw TransportError("socket failed");
  int one = 1;
  setsockopt(ls, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_ANY);
  addr.sin_port = htons(static_cast<uint16_t>(port));
  if (::bind(ls, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0 || ::listen(ls, 1) < 0) {
    ::close(ls);
    throw TransportError("cannot listen on port " + std::to_string(port) + ": " + std::strerror(errno));
  }
  int fd = ::accept(ls, nullptr, nullptr);
  ::close(ls);
  if (fd < 0) throw TransportError("accept failed");
  return std::make_unique<TcpChannel>(fd);
}

std::unique_ptr<Channel> tcp_connect(const std::string& host, int port, int retry_ms) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &res) != 0 || !res)
    throw TransportError("cannot resolve " + host);
  auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(retry_ms);
  for (;;) {
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd >= 0 && ::connect(fd, res->ai_addr, res->ai_addrlen) == 0) {
      freeaddrinfo(res);
      return std::make_unique<TcpChannel>(fd);
    }
    if (fd >= 0) ::close(fd);
    if (std::chrono::steady_clock::now() > deadline) {
      freeaddrinfo(res);
      throw TransportError("cannot connect to " + host + ":" + std::to_string(port));
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
}

}  // namespace fx
