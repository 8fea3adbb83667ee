#include "geobench/common/sha256.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <stdexcept>

namespace geobench {

struct Sha256::Ctx {
  EVP_MD_CTX* md = EVP_MD_CTX_new();
  ~Ctx() { EVP_MD_CTX_free(md); }
  void reset() {
    if (md == nullptr || EVP_DigestInit_ex(md, EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("SHA-256 initialisation failed");
    }
  }
};

Sha256::Sha256() : ctx_(std::make_unique<Ctx>()) { ctx_->reset(); }
Sha256::~Sha256() = default;

void Sha256::update(std::string_view bytes) {
  if (EVP_DigestUpdate(ctx_->md, bytes.data(), bytes.size()) != 1) throw std::runtime_error("SHA-256 update failed");
}

std::string Sha256::hex_digest() {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx_->md, md.data(), &len) != 1) throw std::runtime_error("SHA-256 final failed");
  ctx_->reset();
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 15]);
  }
  return out;
}

std::string Sha256::of(std::string_view bytes) {
  Sha256 h;
  h.update(bytes);
  return h.hex_digest();
}

class HashingStream::Buf : public std::streambuf {
 public:
  Sha256 hash;
  std::uint64_t count = 0;

 protected:
  std::streamsize xsputn(const char* s, std::streamsize n) override {
    hash.update(std::string_view(s, static_cast<std::size_t>(n)));
    count += static_cast<std::uint64_t>(n);
    return n;
  }
  int_type overflow(int_type c) override {
    if (traits_type::eq_int_type(c, traits_type::eof())) return traits_type::not_eof(c);
    const char ch = traits_type::to_char_type(c);
    xsputn(&ch, 1);
    return c;
  }
};

HashingStream::HashingStream() : std::ostream(nullptr), buf_(std::make_unique<Buf>()) { rdbuf(buf_.get()); }
HashingStream::~HashingStream() = default;
std::string HashingStream::hex_digest() {
  flush();
  return buf_->hash.hex_digest();
}
std::uint64_t HashingStream::bytes() const { return buf_->count; }

}  // namespace geobench
