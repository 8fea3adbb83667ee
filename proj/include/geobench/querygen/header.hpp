#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace geobench {

/// Identity of a rendered query: template id plus its canonical parameters.
struct QueryHeader {
  std::string template_id;
  std::map<std::string, std::string> params;

  friend bool operator==(const QueryHeader&, const QueryHeader&) = default;
};

/// RFC 3986 percent-encoding of everything outside the unreserved set.
std::string percent_encode(std::string_view s);
/// Inverse of percent_encode; throws std::invalid_argument on bad escapes.
std::string percent_decode(std::string_view s);

/// "k1=v1&k2=v2" with keys in ascending order and both sides percent-encoded.
std::string canonical_params(const std::map<std::string, std::string>& params);

/// "# gq:template=<id>;params=<canonical>" without a trailing newline.
std::string format_header(const QueryHeader& header);

/// Finds the first header comment line in a query text.
std::optional<QueryHeader> parse_header(std::string_view query_text);

}  // namespace geobench
