#pragma once

#include <memory>
#include <ostream>
#include <streambuf>
#include <string>
#include <string_view>

namespace geobench {

/// Incremental SHA-256 with a lowercase hex digest.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(std::string_view bytes);
  /// Finishes the hash; further updates start a new one.
  std::string hex_digest();

  static std::string of(std::string_view bytes);

 private:
  struct Ctx;
  std::unique_ptr<Ctx> ctx_;
};

/// Output stream that hashes and counts everything written to it.
class HashingStream : public std::ostream {
 public:
  HashingStream();
  ~HashingStream() override;
  std::string hex_digest();
  std::uint64_t bytes() const;

 private:
  class Buf;
  std::unique_ptr<Buf> buf_;
};

}  // namespace geobench
