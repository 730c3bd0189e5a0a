// Edge-detection pipeline: scalar maps from the moment fields, their maxima,
// and tone-mapped output bitmaps.

#pragma once

#include "momentedge/config.hpp"
#include "momentedge/moments.hpp"
#include "momentedge/types.hpp"

namespace momentedge {

struct EdgeResult {
    ScalarField p_map;          // dipole magnitudes P(i,j)
    ScalarField q_map;          // |quadrupole determinant| Q(i,j)
    double p_max = 0.0;
    double q_max = 0.0;
    Bitmap dipole_bitmap;       // tone-mapped P with exponent alpha
    Bitmap quadrupole_bitmap;   // tone-mapped Q with exponent beta
};

// P(i,j) = sqrt(px^2 + py^2).
ScalarField dipole_magnitude_map(const DipoleField& df);

// Q(i,j) = |qxx*qyy - qxy^2|.
ScalarField quadrupole_det_map(const QuadrupoleField& qf);

// b(i,j) = round(255 * (v / v_max)^exponent), round half up. A field whose
// maximum is zero maps to the all-zero bitmap. Throws std::domain_error for
// a negative field value or a non-positive exponent.
Bitmap tone_map(const ScalarField& sf, double exponent);

// Full pipeline: fast moment fields, both scalar maps, maxima (row-major
// scan), tone maps with alpha (dipole) and beta (quadrupole).
EdgeResult detect_edges(const Bitmap& bm, const PipelineConfig& cfg);

}  // namespace momentedge
