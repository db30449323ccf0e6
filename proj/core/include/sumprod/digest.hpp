#ifndef SUMPROD_DIGEST_HPP
#define SUMPROD_DIGEST_HPP

#include <string>
#include <string_view>

namespace sumprod {

/// Lowercase hex SHA-256 digest of a byte string.
std::string sha256_hex(std::string_view bytes);

}  // namespace sumprod

#endif
