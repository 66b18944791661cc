#pragma once

// Binary key file: magic "PAK1", 64-bit little-endian bit count, then
// ceil(count/8) payload bytes packed MSB-first with zero padding.

#include <filesystem>
#include <stdexcept>

#include "pafold/bitstring.hpp"

namespace pafold {

/// Malformed or unreadable key file.
class KeyFileError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_keyfile(const std::filesystem::path& path, const BitString& bits);
BitString read_keyfile(const std::filesystem::path& path);

/// Hex export of the packed payload (convenience only; not bit-exact for
/// lengths that are not byte multiples).
std::string to_hex(const BitString& bits);

} // namespace pafold
