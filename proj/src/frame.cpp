#include "braidcsp/frame.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <thread>

#include "braidcsp/error.hpp"

namespace braidcsp::io {

using nlohmann::json;

std::vector<std::uint8_t> encode_frame(const Frame& f) {
  const std::string payload = json{{"type", f.type}, {"sender", f.sender}, {"body", f.body}}.dump();
  if (payload.size() > kMaxFramePayload) throw WireError("frame payload too large");
  const auto len = static_cast<std::uint32_t>(payload.size());
  std::vector<std::uint8_t> out{static_cast<std::uint8_t>(len >> 24), static_cast<std::uint8_t>(len >> 16),
                                static_cast<std::uint8_t>(len >> 8), static_cast<std::uint8_t>(len)};
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Frame decode_payload(std::span<const std::uint8_t> payload) {
  json j;
  try {
    j = json::parse(payload.begin(), payload.end());
  } catch (const json::parse_error& e) {
    throw WireError(std::string("frame payload is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j.contains("sender") || !j.contains("body") ||
      !j["type"].is_string() || !j["sender"].is_string() || !j["body"].is_object()) {
    throw WireError("frame payload must be {type, sender, body}");
  }
  Frame f{j["type"].get<std::string>(), j["sender"].get<std::string>(), j["body"]};
  if (f.type != "hello" && f.type != "commit" && f.type != "done" && f.type != "error") {
    throw WireError("unknown frame type '" + f.type + "'");
  }
  if (f.sender != "alice" && f.sender != "bob") throw WireError("unknown frame sender '" + f.sender + "'");
  return f;
}

FdStream& FdStream::operator=(FdStream&& other) noexcept {
  if (this != &other) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = std::exchange(other.fd_, -1);
  }
  return *this;
}

FdStream::~FdStream() {
  if (fd_ >= 0) ::close(fd_);
}

void FdStream::write_all(std::span<const std::uint8_t> bytes) {
  std::size_t done = 0;
  while (done < bytes.size()) {
    const ssize_t n = ::send(fd_, bytes.data() + done, bytes.size() - done, MSG_NOSIGNAL);
    if (n < 0 && errno == ENOTSOCK) {
      const ssize_t m = ::write(fd_, bytes.data() + done, bytes.size() - done);
      if (m < 0) throw WireError(std::string("write failed: ") + std::strerror(errno));
      done += static_cast<std::size_t>(m);
      continue;
    }
    if (n < 0) {
      if (errno == EINTR) continue;
      throw WireError(std::string("send failed: ") + std::strerror(errno));
    }
    done += static_cast<std::size_t>(n);
  }
}

std::size_t FdStream::read_some(std::span<std::uint8_t> bytes) {
  for (;;) {
    const ssize_t n = ::read(fd_, bytes.data(), bytes.size());
    if (n >= 0) return static_cast<std::size_t>(n);
    if (errno == EINTR) continue;
    if (errno == ECONNRESET) return 0;
    throw WireError(std::string("read failed: ") + std::strerror(errno));
  }
}

void FdStream::shutdown_write() noexcept { ::shutdown(fd_, SHUT_WR); }

namespace {

// False if the stream ended before the first byte; WireError if it ended
// part way through.
bool read_exact(ByteStream& s, std::span<std::uint8_t> out) {
  std::size_t got = 0;
  while (got < out.size()) {
    const std::size_t n = s.read_some(out.subspan(got));
    if (n == 0) {
      if (got == 0) return false;
      throw WireError("truncated frame");
    }
    got += n;
  }
  return true;
}

}  // namespace

void write_frame(ByteStream& s, const Frame& f) { s.write_all(encode_frame(f)); }

Frame read_frame(ByteStream& s) {
  std::uint8_t header[4];
  if (!read_exact(s, header)) throw WireError("peer closed the stream before a frame");
  const std::uint32_t len = (std::uint32_t{header[0]} << 24) | (std::uint32_t{header[1]} << 16) |
                            (std::uint32_t{header[2]} << 8) | header[3];
  if (len > kMaxFramePayload) throw WireError("frame length exceeds limit");
  std::vector<std::uint8_t> payload(len);
  if (len > 0 && !read_exact(s, payload)) throw WireError("truncated frame");
  return decode_payload(payload);
}

namespace {

sockaddr_in make_address(const std::string& host, std::uint16_t port) {
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  const std::string h = host == "localhost" ? "127.0.0.1" : host;
  if (::inet_pton(AF_INET, h.c_str(), &addr.sin_addr) != 1) throw InputError("invalid IPv4 address '" + host + "'");
  return addr;
}

}  // namespace

FdStream tcp_accept_one(const std::string& host, std::uint16_t port,
                        const std::function<void(std::uint16_t)>& on_listening) {
  FdStream listener(::socket(AF_INET, SOCK_STREAM, 0));
  if (listener.fd() < 0) throw WireError("socket() failed");
  const int yes = 1;
  ::setsockopt(listener.fd(), SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  sockaddr_in addr = make_address(host, port);
  if (::bind(listener.fd(), reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
    throw WireError(std::string("bind failed: ") + std::strerror(errno));
  }
  if (::listen(listener.fd(), 1) != 0) throw WireError("listen failed");
  socklen_t len = sizeof addr;
  ::getsockname(listener.fd(), reinterpret_cast<sockaddr*>(&addr), &len);
  if (on_listening) on_listening(ntohs(addr.sin_port));
  const int peer = ::accept(listener.fd(), nullptr, nullptr);
  if (peer < 0) throw WireError("accept failed");
  return FdStream(peer);
}

FdStream tcp_connect(const std::string& host, std::uint16_t port, int retry_ms) {
  const sockaddr_in addr = make_address(host, port);
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(retry_ms);
  for (;;) {
    FdStream s(::socket(AF_INET, SOCK_STREAM, 0));
    if (s.fd() < 0) throw WireError("socket() failed");
    if (::connect(s.fd(), reinterpret_cast<const sockaddr*>(&addr), sizeof addr) == 0) return s;
    if (std::chrono::steady_clock::now() > deadline) {
      throw WireError(std::string("connect failed: ") + std::strerror(errno));
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
}

}  // namespace braidcsp::io
