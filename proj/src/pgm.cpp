#include "momentedge/pgm.hpp"

#include <fstream>
#include <limits>

namespace momentedge {

namespace {

bool is_pgm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

struct Token {
    long value;
    std::size_t offset;  // byte offset of the first digit
};

struct Scanner {
    std::span<const std::uint8_t> data;
    std::size_t pos;

    void skip_space_and_comments() {
        while (pos < data.size()) {
            const std::uint8_t c = data[pos];
            if (is_pgm_space(c)) {
                ++pos;
            } else if (c == '#') {
                while (pos < data.size() && data[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    Token next_int(const char* what) {
        skip_space_and_comments();
        if (pos >= data.size())
            throw ParseError(std::string("unexpected end of data while reading ") + what, pos);
        if (data[pos] < '0' || data[pos] > '9')
            throw ParseError(std::string("expected digit while reading ") + what, pos);
        const std::size_t start = pos;
        long v = 0;
        while (pos < data.size() && data[pos] >= '0' && data[pos] <= '9') {
            v = v * 10 + (data[pos] - '0');
            if (v > std::numeric_limits<int>::max())
                throw ParseError(std::string("numeric overflow in ") + what, start);
            ++pos;
        }
        return {v, start};
    }
};

// round(255 * t / maxval) in exact integer arithmetic, half rounds up
std::uint8_t rescale_tone(long t, long maxval) {
    return static_cast<std::uint8_t>((510 * t + maxval) / (2 * maxval));
}

}  // namespace

Bitmap read_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
        throw ParseError("not a P2/P5 graymap (bad magic)", 0);
    const bool binary = bytes[1] == '5';

    Scanner sc{bytes, 2};
    if (sc.pos < bytes.size() && !is_pgm_space(bytes[sc.pos]) && bytes[sc.pos] != '#')
        throw ParseError("expected whitespace after magic", sc.pos);

    const Token wt = sc.next_int("width");
    if (wt.value < 1) throw ParseError("width must be positive", wt.offset);
    const Token ht = sc.next_int("height");
    if (ht.value < 1) throw ParseError("height must be positive", ht.offset);
    const Token mt = sc.next_int("maxval");
    if (mt.value < 1 || mt.value > 255)
        throw ParseError("maxval must be in [1, 255]", mt.offset);
    const long maxval = mt.value;
    const std::size_t count = static_cast<std::size_t>(wt.value) * static_cast<std::size_t>(ht.value);

    std::vector<std::uint8_t> tones;
    if (binary) {
        if (sc.pos >= bytes.size() || !is_pgm_space(bytes[sc.pos]))
            throw ParseError("expected one whitespace byte after maxval", sc.pos);
        ++sc.pos;
        if (bytes.size() - sc.pos < count)
            throw ParseError("truncated pixel data", bytes.size());
        tones.reserve(count);
        for (std::size_t k = 0; k < count; ++k) {
            const std::uint8_t t = bytes[sc.pos];
            if (t > maxval) throw ParseError("sample exceeds maxval", sc.pos);
            tones.push_back(maxval == 255 ? t : rescale_tone(t, maxval));
            ++sc.pos;
        }
    } else {
        tones.reserve(count);
        for (std::size_t k = 0; k < count; ++k) {
            const Token t = sc.next_int("sample");
            if (t.value > maxval) throw ParseError("sample exceeds maxval", t.offset);
            tones.push_back(maxval == 255 ? static_cast<std::uint8_t>(t.value)
                                          : rescale_tone(t.value, maxval));
        }
    }
    return Bitmap(static_cast<int>(ht.value), static_cast<int>(wt.value), std::move(tones));
}

std::vector<std::uint8_t> write_pgm(const Bitmap& bm, PgmFormat format) {
    std::string header = format == PgmFormat::P5 ? "P5\n" : "P2\n";
    header += std::to_string(bm.width());
    header += ' ';
    header += std::to_string(bm.height());
    header += "\n255\n";

    std::vector<std::uint8_t> out(header.begin(), header.end());
    if (format == PgmFormat::P5) {
        out.insert(out.end(), bm.tones().begin(), bm.tones().end());
        return out;
    }

    std::string line;
    for (std::uint8_t t : bm.tones()) {
        const std::string dec = std::to_string(t);
        if (line.empty()) {
            line = dec;
        } else if (line.size() + 1 + dec.size() <= 70) {
            line += ' ';
            line += dec;
        } else {
            line += '\n';
            out.insert(out.end(), line.begin(), line.end());
            line = dec;
        }
    }
    line += '\n';
    out.insert(out.end(), line.begin(), line.end());
    return out;
}

Bitmap read_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("read failure on " + path);
    return read_pgm(bytes);
}

void write_pgm_file(const std::string& path, const Bitmap& bm, PgmFormat format) {
    const std::vector<std::uint8_t> bytes = write_pgm(bm, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failure on " + path);
}

}  // namespace momentedge
