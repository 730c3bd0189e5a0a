// PGM (portable graymap) reading and writing, ASCII (P2) and binary (P5),
// 8-bit only. The writer emits one canonical byte form per bitmap.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "momentedge/types.hpp"

namespace momentedge {

enum class PgmFormat { P2, P5 };

// Parses a P2/P5 stream. Header tokens are whitespace-delimited, '#' starts
// a comment running to end of line, and exactly one whitespace byte follows
// the maxval before a P5 payload. Tones with maxval < 255 are rescaled by
// round(255 * t / maxval). Throws ParseError (with byte offset) on bad
// magic, maxval outside [1, 255], out-of-range samples, truncation, or
// token overflow.
Bitmap read_pgm(std::span<const std::uint8_t> bytes);

// Canonical form: magic, newline, "width height", newline, "255", newline,
// payload (P5 raw bytes row-major; P2 space-separated decimal wrapped at 70
// characters per line, trailing newline). read_pgm(write_pgm(bm)) == bm.
std::vector<std::uint8_t> write_pgm(const Bitmap& bm, PgmFormat format);

// File helpers. Read errors surface as ParseError (malformed content) or
// std::runtime_error (I/O).
Bitmap read_pgm_file(const std::string& path);
void write_pgm_file(const std::string& path, const Bitmap& bm, PgmFormat format);

}  // namespace momentedge
