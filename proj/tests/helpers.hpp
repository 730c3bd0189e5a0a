// Shared test utilities: tolerance comparison, deterministic random bitmaps,
// and simple bitmap transforms.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "momentedge/types.hpp"

namespace testutil {

inline bool close(double a, double b, double tol = 1e-9) {
    return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

inline momentedge::Bitmap random_bitmap(std::mt19937& rng, int h, int w, int max_tone = 255) {
    std::uniform_int_distribution<int> tone(0, max_tone);
    std::vector<std::uint8_t> t(static_cast<std::size_t>(h) * w);
    for (auto& x : t) x = static_cast<std::uint8_t>(tone(rng));
    return momentedge::Bitmap(h, w, std::move(t));
}

inline momentedge::Bitmap transpose(const momentedge::Bitmap& bm) {
    std::vector<std::uint8_t> t(bm.tones().size());
    for (int i = 1; i <= bm.height(); ++i)
        for (int j = 1; j <= bm.width(); ++j)
            t[static_cast<std::size_t>(j - 1) * bm.height() + (i - 1)] = bm.at(i, j);
    return momentedge::Bitmap(bm.width(), bm.height(), std::move(t));
}

inline momentedge::Bitmap shifted(const momentedge::Bitmap& bm, int c) {
    std::vector<std::uint8_t> t = bm.tones();
    for (auto& x : t) x = static_cast<std::uint8_t>(x + c);
    return momentedge::Bitmap(bm.height(), bm.width(), std::move(t));
}

inline momentedge::Bitmap scaled(const momentedge::Bitmap& bm, int s) {
    std::vector<std::uint8_t> t = bm.tones();
    for (auto& x : t) x = static_cast<std::uint8_t>(x * s);
    return momentedge::Bitmap(bm.height(), bm.width(), std::move(t));
}

// Two-level vertical step: columns 1..split get `low`, the rest get `high`.
inline momentedge::Bitmap vertical_step(int h, int w, int split, std::uint8_t low,
                                        std::uint8_t high) {
    std::vector<std::uint8_t> t(static_cast<std::size_t>(h) * w);
    for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= w; ++j)
            t[static_cast<std::size_t>(i - 1) * w + (j - 1)] = j <= split ? low : high;
    return momentedge::Bitmap(h, w, std::move(t));
}

}  // namespace testutil
