#pragma once

#include <ostream>
#include <string>
#include <string_view>

namespace gap {

/// Entry point of the gapcli tool. Exit status: 0 success, 1 domain error
/// (diagnostic written to `err`), 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

}  // namespace gap
