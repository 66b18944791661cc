#include "pafold/keyfile.hpp"

#include <array>
#include <fstream>

namespace pafold {

namespace {
constexpr std::array<char, 4> kMagic = {'P', 'A', 'K', '1'};
}

void write_keyfile(const std::filesystem::path& path, const BitString& bits) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw KeyFileError("cannot open for writing: " + path.string());
    out.write(kMagic.data(), kMagic.size());
    std::uint64_t count = bits.size();
    std::array<char, 8> len;
    for (int i = 0; i < 8; ++i)
        len[i] = static_cast<char>((count >> (8 * i)) & 0xFF);
    out.write(len.data(), len.size());
    const auto& payload = bits.packed();
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    if (!out)
        throw KeyFileError("write failed: " + path.string());
}

BitString read_keyfile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw KeyFileError("cannot open for reading: " + path.string());
    std::array<char, 4> magic;
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic)
        throw KeyFileError("bad magic: " + path.string());
    std::array<char, 8> len;
    in.read(len.data(), len.size());
    if (!in)
        throw KeyFileError("truncated header: " + path.string());
    std::uint64_t count = 0;
    for (int i = 0; i < 8; ++i)
        count |= static_cast<std::uint64_t>(static_cast<unsigned char>(len[i]))
                 << (8 * i);
    std::vector<std::uint8_t> payload((count + 7) / 8);
    in.read(reinterpret_cast<char*>(payload.data()),
            static_cast<std::streamsize>(payload.size()));
    if (in.gcount() != static_cast<std::streamsize>(payload.size()))
        throw KeyFileError("truncated payload: " + path.string());
    if (in.peek() != std::ifstream::traits_type::eof())
        throw KeyFileError("trailing bytes after payload: " + path.string());
    try {
        return BitString::from_packed(std::move(payload), count);
    } catch (const std::invalid_argument& e) {
        throw KeyFileError(std::string(e.what()) + ": " + path.string());
    }
}

std::string to_hex(const BitString& bits) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bits.packed().size() * 2);
    for (std::uint8_t b : bits.packed()) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

} // namespace pafold
