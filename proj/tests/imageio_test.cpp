#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "momentedge/pgm.hpp"

using namespace momentedge;
using testutil::random_bitmap;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

Bitmap parse(const std::string& s) { return read_pgm(bytes_of(s)); }

std::size_t offset_of_failure(const std::vector<std::uint8_t>& bytes) {
    try {
        read_pgm(bytes);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("expected a parse error");
    return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("ascii graymaps parse") {
    CHECK(parse("P2 2 1 255 \n 0 255") == Bitmap(1, 2, {0, 255}));
    CHECK(parse("P2\n3 2\n255\n0 1 2\n3 4 5\n") == Bitmap(2, 3, {0, 1, 2, 3, 4, 5}));
    // tokens may be packed tight or spread across lines
    CHECK(parse("P2\t1\t1\t255\t42") == Bitmap(1, 1, {42}));
}

TEST_CASE("comments are skipped anywhere in the header") {
    CHECK(parse("P2 # gray\n2 1 # size\n255 # depth\n0 255") == Bitmap(1, 2, {0, 255}));
    CHECK(parse("P2\n# leading comment line\n1 1 255 9") == Bitmap(1, 1, {9}));
    // comments between ascii samples too
    CHECK(parse("P2 1 2 255 7 # first\n8") == Bitmap(2, 1, {7, 8}));
}

TEST_CASE("binary graymaps parse") {
    std::vector<std::uint8_t> data = bytes_of("P5\n2 2\n255\n");
    data.insert(data.end(), {0x00, 0x7F, 0x80, 0xFF});
    CHECK(read_pgm(data) == Bitmap(2, 2, {0, 127, 128, 255}));

    // payload may begin with a byte that looks like whitespace
    data = bytes_of("P5\n1 1\n255\n");
    data.push_back(0x0A);
    CHECK(read_pgm(data) == Bitmap(1, 1, {10}));
}

TEST_CASE("sub-255 maxval rescales tones") {
    CHECK(parse("P2 1 1 100 50") == Bitmap(1, 1, {128}));  // round(255*50/100)
    CHECK(parse("P2 1 1 100 100") == Bitmap(1, 1, {255}));
    CHECK(parse("P2 1 1 1 1") == Bitmap(1, 1, {255}));
    CHECK(parse("P2 1 1 1 0") == Bitmap(1, 1, {0}));
    CHECK(parse("P2 1 3 2 0 1 2") == Bitmap(3, 1, {0, 128, 255}));

    std::vector<std::uint8_t> data = bytes_of("P5 1 1 100\n");
    data.push_back(50);
    CHECK(read_pgm(data) == Bitmap(1, 1, {128}));
}

TEST_CASE("bad magic is rejected at offset zero") {
    for (const std::string& s : {std::string("P3 1 1 255 0"), std::string("Q2 1 1 255 0"),
                                 std::string("P"), std::string(""), std::string("\0P2", 3)}) {
        CHECK(offset_of_failure(bytes_of(s)) == 0);
    }
    // a digit glued to the magic is not a valid separator
    CHECK(offset_of_failure(bytes_of("P25 1 255 0")) == 2);
}

TEST_CASE("header field errors carry the byte offset") {
    CHECK(offset_of_failure(bytes_of("P2 0 1 255 0")) == 3);   // zero width
    CHECK(offset_of_failure(bytes_of("P2 1 0 255 0")) == 5);   // zero height
    CHECK(offset_of_failure(bytes_of("P2 1 1 256 0")) == 7);   // 16-bit depth
    CHECK(offset_of_failure(bytes_of("P2 1 1 0 0")) == 7);     // zero maxval
    CHECK(offset_of_failure(bytes_of("P2 -1 1 255 0")) == 3);  // not a digit
    CHECK(offset_of_failure(bytes_of("P2 99999999999 1 255 0")) == 3);  // token overflow
}

TEST_CASE("sample errors") {
    CHECK_THROWS_AS(parse("P2 1 1 255 256"), ParseError);
    CHECK_THROWS_AS(parse("P2 1 1 100 101"), ParseError);
    CHECK_THROWS_AS(parse("P2 2 1 255 0"), ParseError);     // missing sample
    CHECK_THROWS_AS(parse("P2 1 1 255 abc"), ParseError);   // not a digit
    CHECK_THROWS_AS(parse("P2 1 1 255"), ParseError);       // truncated before payload

    std::vector<std::uint8_t> data = bytes_of("P5 1 1 100\n");
    data.push_back(101);  // exceeds maxval
    CHECK_THROWS_AS(read_pgm(data), ParseError);
}

TEST_CASE("binary payload truncation is rejected at end of data") {
    std::vector<std::uint8_t> good = bytes_of("P5\n2 2\n255\n");
    good.insert(good.end(), {1, 2, 3, 4});
    CHECK(read_pgm(good) == Bitmap(2, 2, {1, 2, 3, 4}));
    for (std::size_t cut = good.size() - 4; cut < good.size(); ++cut) {
        std::vector<std::uint8_t> bad(good.begin(), good.begin() + cut);
        CHECK(offset_of_failure(bad) == bad.size());
    }
    // missing the single whitespace after maxval
    CHECK_THROWS_AS(read_pgm(bytes_of("P5 2 2 255")), ParseError);
}

TEST_CASE("every header mutation of a small file fails or changes the image") {
    const std::string base = "P2 2 1 255 0 255";
    const Bitmap expect = parse(base);
    for (std::size_t pos = 0; pos < 2; ++pos) {
        for (int c = 0; c < 256; ++c) {
            std::vector<std::uint8_t> mutated = bytes_of(base);
            if (mutated[pos] == c) continue;
            mutated[pos] = static_cast<std::uint8_t>(c);
            if (pos == 1 && c == '5') continue;  // P2 -> P5 flips the payload meaning
            CHECK_THROWS_AS(read_pgm(mutated), ParseError);
        }
    }
}

TEST_CASE("canonical writer output") {
    std::vector<std::uint8_t> p5 = write_pgm(Bitmap(1, 1, {0}), PgmFormat::P5);
    std::vector<std::uint8_t> expect = bytes_of("P5\n1 1\n255\n");
    expect.push_back(0x00);
    CHECK(p5 == expect);

    CHECK(write_pgm(Bitmap(1, 2, {0, 255}), PgmFormat::P2) == bytes_of("P2\n2 1\n255\n0 255\n"));

    // writing the same bitmap twice gives identical bytes
    std::mt19937 rng(301);
    Bitmap bm = random_bitmap(rng, 5, 9);
    CHECK(write_pgm(bm, PgmFormat::P2) == write_pgm(bm, PgmFormat::P2));
    CHECK(write_pgm(bm, PgmFormat::P5) == write_pgm(bm, PgmFormat::P5));
}

TEST_CASE("ascii lines stay within 70 characters") {
    Bitmap wide = Bitmap::filled(1, 40, 255);
    std::vector<std::uint8_t> out = write_pgm(wide, PgmFormat::P2);
    std::size_t line_len = 0;
    for (std::uint8_t b : out) {
        if (b == '\n') {
            line_len = 0;
        } else {
            ++line_len;
            CHECK(line_len <= 70);
        }
    }
    CHECK(out.back() == '\n');
    CHECK(read_pgm(out) == wide);
}

TEST_CASE("round trips are the identity") {
    std::mt19937 rng(302);
    std::uniform_int_distribution<int> dim(1, 24);
    for (int n = 0; n < 100; ++n) {
        Bitmap bm = random_bitmap(rng, dim(rng), dim(rng));
        CHECK(read_pgm(write_pgm(bm, PgmFormat::P2)) == bm);
        CHECK(read_pgm(write_pgm(bm, PgmFormat::P5)) == bm);
    }
}

TEST_CASE("both encodings of one bitmap decode alike") {
    std::mt19937 rng(303);
    Bitmap bm = random_bitmap(rng, 7, 13);
    CHECK(read_pgm(write_pgm(bm, PgmFormat::P2)) == read_pgm(write_pgm(bm, PgmFormat::P5)));
}

TEST_CASE("file helpers") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "momentedge_imageio_test";
    fs::create_directories(dir);
    const std::string path = (dir / "roundtrip.pgm").string();

    std::mt19937 rng(304);
    Bitmap bm = random_bitmap(rng, 6, 4);
    write_pgm_file(path, bm, PgmFormat::P5);
    CHECK(read_pgm_file(path) == bm);
    write_pgm_file(path, bm, PgmFormat::P2);
    CHECK(read_pgm_file(path) == bm);

    CHECK_THROWS_AS(read_pgm_file((dir / "missing.pgm").string()), std::runtime_error);
    CHECK_THROWS_AS(write_pgm_file((dir / "no-such-dir" / "x.pgm").string(), bm, PgmFormat::P5),
                    std::runtime_error);
    fs::remove_all(dir);
}
