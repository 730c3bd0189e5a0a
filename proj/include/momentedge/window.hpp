// Neighborhood resolution: which pixels a window covers at a given output
// position, after boundary substitution.

#pragma once

#include <vector>

#include "momentedge/config.hpp"
#include "momentedge/types.hpp"

namespace momentedge {

// The resolved neighborhood of one output pixel. rows/cols hold the
// substituted 1-based indices in slot order (the virtual interval order);
// clamp and reflect produce repeats. The centroid is the arithmetic mean of
// the substituted coordinate values, and count = |rows| * |cols|.
struct WindowSpec {
    std::vector<int> rows;
    std::vector<int> cols;
    double centroid_x = 0.0;
    double centroid_y = 0.0;
    long long count = 0;
};

// Folds a 1-based virtual index onto [1, n] for the given boundary mode.
// Reflect mirrors about the border (0 -> 1, n+1 -> n), iterated when the
// index is more than one image extent away.
int boundary_fold(int k, int n, Boundary mode);

// True when the window of (i, j) lies entirely inside the bitmap.
bool window_fits(const PipelineConfig& cfg, const Bitmap& bm, int i, int j);

// Resolves the window of output pixel (i, j). Throws ConfigError for an
// anchor/parity mismatch, std::out_of_range for (i, j) outside the bitmap,
// and ConfigError in skip-border mode when the window exits the image
// (callers must not request such pixels; their outputs are defined as zero).
WindowSpec resolve_window(const PipelineConfig& cfg, const Bitmap& bm, int i, int j);

}  // namespace momentedge
