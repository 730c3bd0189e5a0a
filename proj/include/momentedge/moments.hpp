// Dipole and quadrupole moments of gray-tone maps.
//
// Global moments treat the whole image as one charge distribution with the
// raw tones as charges. Local moments work per pixel on a window: the tone
// deviations from that window's mean act as charges, and the moments are
// normalized by the same factor as the mean.
//
// Two implementations of the local fields are provided: the direct
// per-window evaluation (local_dipole_field / local_quadrupole_field) and a
// sliding-window engine (fast_moment_fields) whose total time does not grow
// with the window area. They must agree to 1e-9 relative per component.

#pragma once

#include "momentedge/config.hpp"
#include "momentedge/types.hpp"
#include "momentedge/window.hpp"

namespace momentedge {

// Whole-image dipole: (1/(h*w)) * sum of b(i,j) * (i, j).
DipoleVector global_dipole(const Bitmap& bm);

// Whole-image traceless quadrupole tensor:
// (1/(h*w)) * sum of b * (2x^2 - r^2, 2y^2 - r^2, 2xy), r^2 = x^2 + y^2.
QuadrupoleTensor global_quadrupole(const Bitmap& bm);

// Mean tone over the window, divided by the configured normalizer
// (pixel count, or the literal 4*di*dj for centered windows).
double local_mean(const Bitmap& bm, const WindowSpec& win, const PipelineConfig& cfg);

// Per-pixel mean map M(i, j). Skip-border pixels are zero.
ScalarField local_mean_map(const Bitmap& bm, const PipelineConfig& cfg);

// Per-pixel charge q(i, j) = b(i, j) - M(i, j). Skip-border pixels are zero.
ScalarField charge_map(const Bitmap& bm, const PipelineConfig& cfg);

// Direct per-window local dipole field. For each output pixel the charges
// of its window (relative to that window's own mean) are accumulated against
// the configured coordinates (absolute, or relative to the window centroid),
// in row-major slot order, then divided by the normalizer.
DipoleField local_dipole_field(const Bitmap& bm, const PipelineConfig& cfg);

// Direct per-window local quadrupole field. Qxx accumulates q * (x^2 - y^2),
// Qxy accumulates q * (f * x * y) with f the configured cross-term factor,
// and Qyy = -Qxx.
QuadrupoleField local_quadrupole_field(const Bitmap& bm, const PipelineConfig& cfg);

struct MomentFields {
    DipoleField dipole;
    QuadrupoleField quadrupole;
};

// Sliding-window evaluation of both local fields. Output is identical to the
// direct per-window operations within 1e-9 relative per component, but the
// running window sums (b, b*x, b*y, b*x^2, b*y^2, b*x*y) make the total cost
// O(h*w) regardless of window size. Horizontal running sums are rebuilt from
// scratch on every output row.
MomentFields fast_moment_fields(const Bitmap& bm, const PipelineConfig& cfg);

}  // namespace momentedge
