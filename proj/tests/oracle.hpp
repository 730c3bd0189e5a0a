// Brute-force reference for the local moments, written independently of the
// library internals: its own boundary folding (iterative bouncing instead of
// modular arithmetic), plain b - M charges, and the literal 2x^2 - r^2 tensor
// components. Used to cross-check both library implementations.

#pragma once

#include <vector>

#include "momentedge/config.hpp"
#include "momentedge/types.hpp"

namespace oracle {

struct Moments {
    double mean = 0.0;
    double px = 0.0, py = 0.0;
    double qxx = 0.0, qyy = 0.0, qxy = 0.0;
};

inline int fold(int k, int n, momentedge::Boundary mode) {
    if (mode == momentedge::Boundary::Clamp) return k < 1 ? 1 : (k > n ? n : k);
    while (k < 1 || k > n) {
        if (k < 1)
            k = 1 - k;
        else
            k = 2 * n + 1 - k;
    }
    return k;
}

inline bool window_inside(const momentedge::PipelineConfig& cfg, const momentedge::Bitmap& bm,
                          int i, int j) {
    const int br = cfg.anchor == momentedge::WindowAnchor::CenteredOdd ? (cfg.window_height - 1) / 2 : 0;
    const int bc = cfg.anchor == momentedge::WindowAnchor::CenteredOdd ? (cfg.window_width - 1) / 2 : 0;
    return i - br >= 1 && i - br + cfg.window_height - 1 <= bm.height() && j - bc >= 1 &&
           j - bc + cfg.window_width - 1 <= bm.width();
}

// Moments of the window at (i, j); all zero when skip-border suppresses it.
inline Moments window_moments(const momentedge::Bitmap& bm, const momentedge::PipelineConfig& cfg,
                              int i, int j) {
    using momentedge::Boundary;
    using momentedge::MeanNormalization;
    using momentedge::Origin;
    using momentedge::WindowAnchor;

    Moments m;
    if (cfg.boundary == Boundary::SkipBorder && !window_inside(cfg, bm, i, j)) return m;

    const int br = cfg.anchor == WindowAnchor::CenteredOdd ? (cfg.window_height - 1) / 2 : 0;
    const int bc = cfg.anchor == WindowAnchor::CenteredOdd ? (cfg.window_width - 1) / 2 : 0;
    std::vector<int> rows, cols;
    for (int k = i - br; k < i - br + cfg.window_height; ++k)
        rows.push_back(fold(k, bm.height(), cfg.boundary));
    for (int l = j - bc; l < j - bc + cfg.window_width; ++l)
        cols.push_back(fold(l, bm.width(), cfg.boundary));

    double d;
    if (cfg.mean_normalization == MeanNormalization::PixelCount)
        d = static_cast<double>(rows.size() * cols.size());
    else
        d = 4.0 * ((cfg.window_height - 1) / 2) * ((cfg.window_width - 1) / 2);

    double sum = 0.0;
    for (int r : rows)
        for (int c : cols) sum += bm.at(r, c);
    m.mean = sum / d;

    double ox = 0.0, oy = 0.0;
    if (cfg.origin == Origin::WindowCenter) {
        for (int r : rows) ox += r;
        for (int c : cols) oy += c;
        ox /= static_cast<double>(rows.size());
        oy /= static_cast<double>(cols.size());
    }

    const double f = cfg.qxy_factor;
    for (int r : rows) {
        for (int c : cols) {
            const double q = bm.at(r, c) - m.mean;
            const double x = r - ox, y = c - oy;
            const double r2 = x * x + y * y;
            m.px += q * x;
            m.py += q * y;
            m.qxx += q * (2.0 * x * x - r2);
            m.qyy += q * (2.0 * y * y - r2);
            m.qxy += q * f * x * y;
        }
    }
    m.px /= d;
    m.py /= d;
    m.qxx /= d;
    m.qyy /= d;
    m.qxy /= d;
    return m;
}

}  // namespace oracle
