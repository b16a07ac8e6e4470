#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace braidcsp::io {

inline constexpr std::size_t kMaxFramePayload = 1u << 24;

/// One session message: 4-byte big-endian payload length, then UTF-8 JSON
/// {"type": hello|commit|done|error, "sender": alice|bob, "body": {...}}.
struct Frame {
  std::string type;
  std::string sender;
  nlohmann::json body = nlohmann::json::object();

  friend bool operator==(const Frame&, const Frame&) = default;
};

std::vector<std::uint8_t> encode_frame(const Frame& f);
/// Parses a payload (without the length prefix); WireError if invalid.
Frame decode_payload(std::span<const std::uint8_t> payload);

class ByteStream {
 public:
  virtual ~ByteStream() = default;
  virtual void write_all(std::span<const std::uint8_t> bytes) = 0;
  /// Reads up to bytes.size(); returns 0 at end of stream.
  virtual std::size_t read_some(std::span<std::uint8_t> bytes) = 0;
};

/// Owns a file descriptor (socket, pipe end).
class FdStream : public ByteStream {
 public:
  explicit FdStream(int fd) noexcept : fd_(fd) {}
  FdStream(FdStream&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}
  FdStream& operator=(FdStream&& other) noexcept;
  FdStream(const FdStream&) = delete;
  FdStream& operator=(const FdStream&) = delete;
  ~FdStream() override;

  void write_all(std::span<const std::uint8_t> bytes) override;
  std::size_t read_some(std::span<std::uint8_t> bytes) override;
  /// Half-close the write side.
  void shutdown_write() noexcept;
  int fd() const noexcept { return fd_; }

 private:
  int fd_ = -1;
};

void write_frame(ByteStream& s, const Frame& f);
/// WireError on EOF inside a frame, oversized length or a bad payload.
Frame read_frame(ByteStream& s);

/// Binds host:port (port 0 picks one), reports the bound port, accepts one peer.
FdStream tcp_accept_one(const std::string& host, std::uint16_t port,
                        const std::function<void(std::uint16_t)>& on_listening);
/// Connects, retrying for up to `retry_ms` while the peer is not yet listening.
FdStream tcp_connect(const std::string& host, std::uint16_t port, int retry_ms = 5000);

}  // namespace braidcsp::io
