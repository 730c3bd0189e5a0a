#include "momentedge/config.hpp"

#include <cmath>

namespace momentedge {

void PipelineConfig::validate() const {
    if (window_height < 1 || window_width < 1)
        throw ConfigError("window dimensions must be positive");
    if (static_cast<long long>(window_height) * window_width < 2)
        throw ConfigError("a 1x1 window yields identically-zero charge and is rejected");
    if (anchor == WindowAnchor::CenteredOdd) {
        if (window_height % 2 == 0 || window_width % 2 == 0)
            throw ConfigError("centered-odd anchor requires odd window dimensions, got " +
                              std::to_string(window_height) + "x" + std::to_string(window_width));
    } else {
        if (window_height % 2 != 0 || window_width % 2 != 0)
            throw ConfigError("topleft-even anchor requires even window dimensions, got " +
                              std::to_string(window_height) + "x" + std::to_string(window_width));
    }
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw ConfigError("alpha must be finite and positive");
    if (!std::isfinite(beta) || beta <= 0.0)
        throw ConfigError("beta must be finite and positive");
    if (qxy_factor != 1 && qxy_factor != 2)
        throw ConfigError("qxy factor must be 1 or 2");
    if (mean_normalization == MeanNormalization::FourDiDj) {
        if (anchor != WindowAnchor::CenteredOdd)
            throw ConfigError("4didj normalization requires a centered-odd window "
                              "(di, dj undefined for topleft-even anchors)");
        if (delta_rows() < 1 || delta_cols() < 1)
            throw ConfigError("4didj normalization is zero for windows with a unit dimension");
    }
}

WindowAnchor parse_anchor(const std::string& s) {
    if (s == "centered-odd") return WindowAnchor::CenteredOdd;
    if (s == "topleft-even") return WindowAnchor::TopleftEven;
    throw ConfigError("unknown anchor '" + s + "' (expected centered-odd or topleft-even)");
}

Boundary parse_boundary(const std::string& s) {
    if (s == "clamp") return Boundary::Clamp;
    if (s == "reflect") return Boundary::Reflect;
    if (s == "skip-border") return Boundary::SkipBorder;
    throw ConfigError("unknown boundary '" + s + "' (expected clamp, reflect or skip-border)");
}

Origin parse_origin(const std::string& s) {
    if (s == "window-center") return Origin::WindowCenter;
    if (s == "absolute") return Origin::Absolute;
    throw ConfigError("unknown origin '" + s + "' (expected window-center or absolute)");
}

MeanNormalization parse_mean_normalization(const std::string& s) {
    if (s == "pixel-count") return MeanNormalization::PixelCount;
    if (s == "4didj") return MeanNormalization::FourDiDj;
    throw ConfigError("unknown mean normalization '" + s +
                      "' (expected pixel-count or 4didj)");
}

std::string to_string(WindowAnchor a) {
    return a == WindowAnchor::CenteredOdd ? "centered-odd" : "topleft-even";
}

std::string to_string(Boundary b) {
    switch (b) {
        case Boundary::Clamp: return "clamp";
        case Boundary::Reflect: return "reflect";
        default: return "skip-border";
    }
}

std::string to_string(Origin o) {
    return o == Origin::WindowCenter ? "window-center" : "absolute";
}

std::string to_string(MeanNormalization m) {
    return m == MeanNormalization::PixelCount ? "pixel-count" : "4didj";
}

}  // namespace momentedge
