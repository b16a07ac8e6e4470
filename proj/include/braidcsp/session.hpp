#pragma once

#include <vector>

#include "braidcsp/frame.hpp"
#include "braidcsp/scenario.hpp"

namespace braidcsp::io {

struct SessionResult {
  SharedKey key;
  std::vector<Frame> sent;
  std::vector<Frame> received;
};

/// Plays one side of the scenario's protocol over `stream`:
/// hello (protocol + public values) -> commit (own message) -> done.
/// Both sides send before they read, so the exchange is symmetric.
/// Any violation sends an error frame (when possible) and throws WireError.
SessionResult run_session(const Scenario& s, Side role, ByteStream& stream);

}  // namespace braidcsp::io
