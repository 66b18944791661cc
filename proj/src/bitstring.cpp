#include "pafold/bitstring.hpp"

#include "pafold/pa_math.hpp"

namespace pafold {

BitString BitString::parse(std::string_view text) {
    BitString s;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit string may contain only 0 and 1");
        s.append(c == '1');
    }
    return s;
}

BitString BitString::from_packed(std::vector<std::uint8_t> bytes,
                                 std::uint64_t bit_count) {
    if (bytes.size() != (bit_count + 7) / 8)
        throw std::invalid_argument("packed byte count does not match bit count");
    if (bit_count % 8 != 0 && !bytes.empty()) {
        std::uint8_t pad_mask =
            static_cast<std::uint8_t>(0xFF >> (bit_count % 8));
        if (bytes.back() & pad_mask)
            throw std::invalid_argument("padding bits must be zero");
    }
    BitString s;
    s.bytes_ = std::move(bytes);
    s.size_ = bit_count;
    return s;
}

void BitString::append(bool bit) {
    if (size_ % 8 == 0)
        bytes_.push_back(0);
    if (bit)
        bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - (size_ & 7)));
    ++size_;
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(size_);
    for (std::uint64_t i = 0; i < size_; ++i)
        out.push_back(bit(i) ? '1' : '0');
    return out;
}

KeyRequest::KeyRequest(std::uint64_t L, int k) : final_bits(L), fold_count(k) {
    if (L < 1)
        throw std::domain_error("final key length must be at least 1");
    if (k < 0 || k > kMaxFoldCount)
        throw std::domain_error("fold count out of range");
}

ShortageError::ShortageError(std::uint64_t avail, std::uint64_t req)
    : std::runtime_error("insufficient raw bits: have " +
                         std::to_string(avail) + ", need " +
                         std::to_string(req)),
      available(avail), required(req) {}

BitString xor_fold(const BitString& s) {
    if (s.size() < 2 || s.size() % 2 != 0)
        throw std::length_error("xor_fold needs an even, nonzero bit count");
    BitString out;
    for (std::uint64_t j = 0; j < s.size() / 2; ++j)
        out.append(s.bit(2 * j) != s.bit(2 * j + 1));
    return out;
}

BitString fold_times(const BitString& s, int k) {
    if (k < 0 || k > kMaxFoldCount)
        throw std::domain_error("fold count out of range");
    if (s.size() % (std::uint64_t{1} << k) != 0)
        throw std::length_error("bit count not divisible by 2^k");
    BitString cur = s;
    for (int i = 0; i < k && !cur.empty(); ++i)
        cur = xor_fold(cur);
    return cur;
}

DistillResult distill(const BitString& raw, const KeyRequest& req) {
    std::uint64_t needed = req.raw_bits_needed();
    if (raw.size() < needed)
        throw ShortageError(raw.size(), needed);
    BitString key;
    std::uint64_t block = req.block_size();
    for (std::uint64_t i = 0; i < req.final_bits; ++i) {
        BitString chunk;
        for (std::uint64_t j = 0; j < block; ++j)
            chunk.append(raw.bit(i * block + j));
        key.append(fold_times(chunk, req.fold_count).bit(0));
    }
    return DistillResult{std::move(key), raw.size() - needed};
}

} // namespace pafold
