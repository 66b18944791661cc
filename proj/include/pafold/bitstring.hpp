#pragma once

// Packed bit sequences and the XOR-fold distillation pipeline.
//
// Bits are kept in stream order and packed most-significant-bit-first
// within each byte; padding bits in the last byte are always zero. That
// packing is also the on-disk payload layout of the key file format.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pafold {

class BitString {
public:
    BitString() = default;

    /// Parse a string of '0'/'1' characters.
    static BitString parse(std::string_view text);

    /// Wrap packed bytes (MSB-first). Padding bits must be zero.
    static BitString from_packed(std::vector<std::uint8_t> bytes,
                                 std::uint64_t bit_count);

    void append(bool bit);

    bool bit(std::uint64_t index) const {
        if (index >= size_)
            throw std::out_of_range("bit index out of range");
        return (bytes_[index >> 3] >> (7 - (index & 7))) & 1;
    }

    std::uint64_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    /// Packed MSB-first bytes, final byte zero-padded.
    const std::vector<std::uint8_t>& packed() const noexcept { return bytes_; }

    std::string to_string() const;

    friend bool operator==(const BitString& a, const BitString& b) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t size_ = 0;
};

struct KeyRequest {
    std::uint64_t final_bits; // L >= 1
    int fold_count;           // k >= 0

    KeyRequest(std::uint64_t L, int k);
    std::uint64_t raw_bits_needed() const noexcept {
        return final_bits << fold_count;
    }
    std::uint64_t block_size() const noexcept {
        return std::uint64_t{1} << fold_count;
    }
};

/// Raised by distill when the raw material cannot cover the request.
class ShortageError : public std::runtime_error {
public:
    ShortageError(std::uint64_t available, std::uint64_t required);
    std::uint64_t available;
    std::uint64_t required;
};

/// Replace adjacent disjoint pairs by their XOR, halving the length.
/// Input must have even, nonzero length.
BitString xor_fold(const BitString& s);

/// Apply xor_fold k times; length must be divisible by 2^k. A block of
/// exactly 2^k bits reduces to its parity.
BitString fold_times(const BitString& s, int k);

struct DistillResult {
    BitString key;
    std::uint64_t surplus_bits; // raw bits beyond L * 2^k, ignored
};

/// Partition the first L * 2^k raw bits into L consecutive blocks, fold
/// each down to one bit, return the L-bit final key.
DistillResult distill(const BitString& raw, const KeyRequest& req);

} // namespace pafold
