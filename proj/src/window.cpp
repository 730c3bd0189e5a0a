#include "momentedge/window.hpp"

#include <algorithm>
#include <numeric>

namespace momentedge {

namespace {

// Virtual interval of the window along one dimension: [anchor_lo, anchor_lo + extent - 1].
int range_start(WindowAnchor anchor, int center, int extent) {
    if (anchor == WindowAnchor::CenteredOdd) return center - (extent - 1) / 2;
    return center;
}

std::vector<int> folded_indices(int lo, int extent, int n, Boundary mode) {
    std::vector<int> out;
    out.reserve(extent);
    for (int k = lo; k < lo + extent; ++k) out.push_back(boundary_fold(k, n, mode));
    return out;
}

}  // namespace

int boundary_fold(int k, int n, Boundary mode) {
    if (k >= 1 && k <= n) return k;
    switch (mode) {
        case Boundary::Clamp:
            return std::clamp(k, 1, n);
        case Boundary::Reflect: {
            // Mirror about the border: 0 -> 1, n+1 -> n, period 2n.
            int period = 2 * n;
            int m = (k - 1) % period;
            if (m < 0) m += period;
            return m < n ? m + 1 : period - m;
        }
        default:
            throw ConfigError("skip-border window exits the image; such output pixels are zero "
                              "and must not be resolved");
    }
}

bool window_fits(const PipelineConfig& cfg, const Bitmap& bm, int i, int j) {
    int r0 = range_start(cfg.anchor, i, cfg.window_height);
    int c0 = range_start(cfg.anchor, j, cfg.window_width);
    return r0 >= 1 && r0 + cfg.window_height - 1 <= bm.height() && c0 >= 1 &&
           c0 + cfg.window_width - 1 <= bm.width();
}

WindowSpec resolve_window(const PipelineConfig& cfg, const Bitmap& bm, int i, int j) {
    cfg.validate();
    if (i < 1 || i > bm.height() || j < 1 || j > bm.width())
        throw std::out_of_range("resolve_window: pixel (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside bitmap");

    WindowSpec win;
    win.rows = folded_indices(range_start(cfg.anchor, i, cfg.window_height), cfg.window_height,
                              bm.height(), cfg.boundary);
    win.cols = folded_indices(range_start(cfg.anchor, j, cfg.window_width), cfg.window_width,
                              bm.width(), cfg.boundary);
    win.count = static_cast<long long>(win.rows.size()) * win.cols.size();
    win.centroid_x = std::accumulate(win.rows.begin(), win.rows.end(), 0.0) / win.rows.size();
    win.centroid_y = std::accumulate(win.cols.begin(), win.cols.end(), 0.0) / win.cols.size();
    return win;
}

}  // namespace momentedge
