// Pipeline configuration: window geometry and anchoring, boundary handling,
// coordinate origin, the local-quadrupole cross-term factor, tone-map
// exponents, and the local-mean normalization mode.

#pragma once

#include <string>

#include "momentedge/types.hpp"

namespace momentedge {

// How the window attaches to its output pixel. Centered windows need odd
// dimensions ([i-D, i+D]); top-left anchored windows need even dimensions
// ({i, ..., i+n-1}, the 2x2 case).
enum class WindowAnchor { CenteredOdd, TopleftEven };

// What happens where the window exits the image: clamp substitutes the
// nearest valid index, reflect mirrors about the border, skip-border defines
// every output pixel whose window exits the image as zero.
enum class Boundary { Clamp, Reflect, SkipBorder };

// Coordinate origin for local moments: relative to the window centroid
// (translation invariant, the default) or the absolute pixel position.
enum class Origin { WindowCenter, Absolute };

// Normalizer for the local mean and moments: the true pixel count, or the
// literal 4*di*dj prefactor (centered windows only).
enum class MeanNormalization { PixelCount, FourDiDj };

struct PipelineConfig {
    int window_height = 2;
    int window_width = 2;
    WindowAnchor anchor = WindowAnchor::TopleftEven;
    Boundary boundary = Boundary::Clamp;
    Origin origin = Origin::WindowCenter;
    int qxy_factor = 2;  // 2: tensor convention; 1: literal local cross term
    double alpha = 0.5;
    double beta = 0.25;
    MeanNormalization mean_normalization = MeanNormalization::PixelCount;

    // Throws ConfigError on any invalid combination.
    void validate() const;

    // Window half-extent along rows / columns. Centered-odd windows only.
    int delta_rows() const { return (window_height - 1) / 2; }
    int delta_cols() const { return (window_width - 1) / 2; }

    // Normalizer D shared by the local mean and the local moments.
    double normalizer(long long pixel_count) const {
        if (mean_normalization == MeanNormalization::PixelCount)
            return static_cast<double>(pixel_count);
        return 4.0 * delta_rows() * delta_cols();
    }
};

// Flag-string conversions used by the CLI and the field dumps.
WindowAnchor parse_anchor(const std::string& s);
Boundary parse_boundary(const std::string& s);
Origin parse_origin(const std::string& s);
MeanNormalization parse_mean_normalization(const std::string& s);
std::string to_string(WindowAnchor a);
std::string to_string(Boundary b);
std::string to_string(Origin o);
std::string to_string(MeanNormalization m);

}  // namespace momentedge
