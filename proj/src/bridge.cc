// Copyright 2026 The sumattack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fcntl.h>
#include <netdb.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstring>
#include <string>

#include "json.hpp"
#include "sumattack/similarity.h"

namespace sumattack {
namespace {

using json = nlohmann::json;

std::string errno_text(const char* what) {
  return std::string(what) + ": " + std::strerror(errno);
}

// Buffered line reader/writer over a pair of file descriptors.
class FdChannel : public LineChannel {
 public:
  FdChannel(int read_fd, int write_fd) : read_fd_(read_fd), write_fd_(write_fd) {}

  void write_line(std::string_view line) override {
    std::string buf(line);
    buf.push_back('\n');
    std::size_t off = 0;
    while (off < buf.size()) {
      const ssize_t n = write_some(buf.data() + off, buf.size() - off);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw TransportError(errno_text("bridge write failed"));
      }
      off += static_cast<std::size_t>(n);
    }
  }

  bool read_line(std::string& line) override {
    while (true) {
      const auto nl = pending_.find('\n');
      if (nl != std::string::npos) {
        line = pending_.substr(0, nl);
        pending_.erase(0, nl + 1);
        return true;
      }
      char chunk[4096];
      const ssize_t n = ::read(read_fd_, chunk, sizeof chunk);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw TransportError(errno_text("bridge read failed"));
      }
      if (n == 0) return false;
      pending_.append(chunk, static_cast<std::size_t>(n));
    }
  }

 protected:
  virtual ssize_t write_some(const char* data, std::size_t len) {
    return ::write(write_fd_, data, len);
  }

  int read_fd_;
  int write_fd_;
  std::string pending_;
};

class SocketChannel final : public FdChannel {
 public:
  explicit SocketChannel(int fd) : FdChannel(fd, fd) {}
  ~SocketChannel() override { ::close(read_fd_); }

 protected:
  ssize_t write_some(const char* data, std::size_t len) override {
    return ::send(write_fd_, data, len, MSG_NOSIGNAL);
  }
};

class ProcessChannel final : public FdChannel {
 public:
  ProcessChannel(pid_t pid, int read_fd, int write_fd)
      : FdChannel(read_fd, write_fd), pid_(pid) {}
  ~ProcessChannel() override {
    ::close(write_fd_);  // EOF tells the sidecar to exit
    ::close(read_fd_);
    int status = 0;
    while (::waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
    }
  }

 private:
  pid_t pid_;
};

std::unique_ptr<LineChannel> open_tcp(const std::string& target) {
  const auto colon = target.rfind(':');
  if (colon == std::string::npos || colon == 0) {
    throw TransportError("bad tcp endpoint, expected tcp://HOST:PORT: " + target);
  }
  const std::string host = target.substr(0, colon);
  const std::string port = target.substr(colon + 1);
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (int rc = ::getaddrinfo(host.c_str(), port.c_str(), &hints, &res); rc != 0) {
    throw TransportError("cannot resolve " + target + ": " + gai_strerror(rc));
  }
  int fd = -1;
  for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(res);
  if (fd < 0) throw TransportError("cannot connect to " + target);
  return std::make_unique<SocketChannel>(fd);
}

std::unique_ptr<LineChannel> open_process(const std::string& command) {
  int to_child[2], from_child[2];
  if (::pipe2(to_child, O_CLOEXEC) != 0) throw TransportError(errno_text("pipe"));
  if (::pipe2(from_child, O_CLOEXEC) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw TransportError(errno_text("pipe"));
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) {
      ::close(fd);
    }
    throw TransportError(errno_text("fork"));
  }
  if (pid == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(to_child[0]);
  ::close(from_child[1]);
  // A sidecar that dies mid-write must surface as EPIPE, not kill us.
  ::signal(SIGPIPE, SIG_IGN);
  return std::make_unique<ProcessChannel>(pid, from_child[0], to_child[1]);
}

double field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end() || !it->is_number()) {
    throw TransportError(std::string("bridge reply lacks numeric field '") +
                         name + "'");
  }
  const double v = it->get<double>();
  if (!std::isfinite(v)) {
    throw TransportError(std::string("bridge reply field '") + name +
                         "' is not finite");
  }
  return v;
}

}  // namespace

std::unique_ptr<LineChannel> open_channel(const std::string& endpoint) {
  if (endpoint.rfind("tcp://", 0) == 0) return open_tcp(endpoint.substr(6));
  if (endpoint.rfind("exec:", 0) == 0) return open_process(endpoint.substr(5));
  throw TransportError("unknown bridge endpoint scheme: " + endpoint);
}

std::string encode_request(std::int64_t id, std::string_view candidate,
                           std::string_view reference) {
  json j = {{"id", id},
            {"op", "score"},
            {"candidate", std::string(candidate)},
            {"reference", std::string(reference)}};
  // Invalid UTF-8 is replaced rather than thrown on.
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

SimilarityScore decode_response(std::string_view line, std::int64_t expected_id) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw TransportError("malformed bridge reply: " + std::string(line));
  }
  auto id = j.find("id");
  if (id == j.end() || !id->is_number_integer() ||
      id->get<std::int64_t>() != expected_id) {
    throw TransportError("bridge reply id mismatch (expected " +
                         std::to_string(expected_id) + "): " + std::string(line));
  }
  if (auto err = j.find("error"); err != j.end()) {
    throw SidecarError("sidecar error: " +
                       (err->is_string() ? err->get<std::string>() : err->dump()));
  }
  return {field(j, "precision"), field(j, "recall"), field(j, "f1")};
}

BridgeScorer::BridgeScorer(std::unique_ptr<LineChannel> channel,
                           std::string endpoint)
    : channel_(std::move(channel)), endpoint_(std::move(endpoint)) {}

std::unique_ptr<BridgeScorer> BridgeScorer::connect(const std::string& endpoint) {
  return std::make_unique<BridgeScorer>(open_channel(endpoint), endpoint);
}

SimilarityScore BridgeScorer::score(std::string_view candidate,
                                    std::string_view reference) {
  const TextPair pair{std::string(candidate), std::string(reference)};
  return batch_score(std::span<const TextPair>(&pair, 1)).front();
}

std::vector<SimilarityScore> BridgeScorer::batch_score(
    std::span<const TextPair> pairs) {
  for (const auto& [c, r] : pairs) {
    if (c.empty() || r.empty()) {
      throw std::invalid_argument("similarity scoring needs non-empty texts");
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (!channel_) throw TransportError("bridge connection is closed");
  const std::int64_t first = next_id_;
  next_id_ += static_cast<std::int64_t>(pairs.size());
  std::vector<SimilarityScore> out;
  out.reserve(pairs.size());
  std::string line;
  try {
    // One request in flight at a time; replies must come back in order.
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::int64_t id = first + static_cast<std::int64_t>(i);
      channel_->write_line(encode_request(id, pairs[i].first, pairs[i].second));
      if (!channel_->read_line(line)) {
        throw TransportError("bridge closed the stream");
      }
      out.push_back(decode_response(line, id));
    }
  } catch (const SidecarError&) {
    throw;  // the stream is still in sync
  } catch (const TransportError&) {
    channel_.reset();
    throw;
  }
  return out;
}

}  // namespace sumattack
