#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "pafold/keyfile.hpp"

using namespace pafold;

namespace {

struct TempFile {
    std::filesystem::path path;
    TempFile() {
        path = std::filesystem::temp_directory_path() /
               ("pafold_test_" + std::to_string(std::random_device{}()) +
                ".pak");
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("keyfile layout") {
    TempFile tmp;
    write_keyfile(tmp.path, BitString::parse("1101"));

    std::ifstream in(tmp.path, std::ios::binary);
    std::vector<char> bytes((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
    REQUIRE(bytes.size() == 13); // magic + u64 count + 1 payload byte
    CHECK(std::string(bytes.data(), 4) == "PAK1");
    CHECK(static_cast<unsigned char>(bytes[4]) == 4); // LE count
    for (int i = 5; i < 12; ++i)
        CHECK(bytes[i] == 0);
    CHECK(static_cast<unsigned char>(bytes[12]) == 0xD0);
}

TEST_CASE("keyfile round trip across lengths") {
    TempFile tmp;
    std::mt19937_64 rng(3);
    for (std::uint64_t len : {0ull, 1ull, 7ull, 8ull, 9ull, 63ull, 64ull,
                              65ull, 1024ull, 1025ull}) {
        BitString s;
        for (std::uint64_t i = 0; i < len; ++i)
            s.append(rng() & 1);
        write_keyfile(tmp.path, s);
        CHECK(read_keyfile(tmp.path) == s);
    }
}

TEST_CASE("keyfile rejects corruption") {
    TempFile tmp;
    CHECK_THROWS_AS(read_keyfile(tmp.path), KeyFileError); // missing file

    write_keyfile(tmp.path, BitString::parse("10110"));
    {
        std::fstream f(tmp.path, std::ios::in | std::ios::out |
                                     std::ios::binary);
        f.put('X'); // clobber magic
    }
    CHECK_THROWS_AS(read_keyfile(tmp.path), KeyFileError);

    write_keyfile(tmp.path, BitString::parse("10110"));
    {
        std::ofstream f(tmp.path, std::ios::app | std::ios::binary);
        f.put('\0'); // trailing byte
    }
    CHECK_THROWS_AS(read_keyfile(tmp.path), KeyFileError);

    write_keyfile(tmp.path, BitString::parse("10110"));
    {
        std::fstream f(tmp.path, std::ios::in | std::ios::out |
                                     std::ios::binary);
        f.seekp(12);
        f.put(static_cast<char>(0xFF)); // nonzero padding bits
    }
    CHECK_THROWS_AS(read_keyfile(tmp.path), KeyFileError);
}

TEST_CASE("hex export") {
    CHECK(to_hex(BitString::parse("11010110")) == "d6");
    CHECK(to_hex(BitString::parse("1101")) == "d0");
    CHECK(to_hex(BitString{}) == "");
}
