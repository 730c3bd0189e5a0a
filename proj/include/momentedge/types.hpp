// Core value types: 8-bit grayscale bitmaps, real-valued per-pixel fields,
// and the dipole / quadrupole moment values they carry.
//
// Conventions used throughout the library:
//   - pixel indices are 1-based in the public API, (row i, column j);
//   - the coordinate of pixel (i, j) is x = i, y = j;
//   - field values are double precision; tones are 8-bit only at the
//     Bitmap boundary.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace momentedge {

// Bad pipeline configuration (window parity, normalization mode, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input stream; carries the byte offset where parsing stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// h x w grid of 8-bit gray tones, row-major. Immutable after construction.
class Bitmap {
public:
    Bitmap(int height, int width, std::vector<std::uint8_t> tones)
        : h_(height), w_(width), tones_(std::move(tones)) {
        if (h_ < 1 || w_ < 1)
            throw std::invalid_argument("Bitmap: dimensions must be positive");
        if (tones_.size() != static_cast<std::size_t>(h_) * static_cast<std::size_t>(w_))
            throw std::invalid_argument("Bitmap: tone grid size does not match dimensions");
    }

    static Bitmap filled(int height, int width, std::uint8_t tone) {
        return Bitmap(height, width,
                      std::vector<std::uint8_t>(
                          static_cast<std::size_t>(height) * static_cast<std::size_t>(width), tone));
    }

    int height() const { return h_; }
    int width() const { return w_; }

    // 1-based, bounds-checked.
    std::uint8_t at(int i, int j) const {
        if (i < 1 || i > h_ || j < 1 || j > w_)
            throw std::out_of_range("Bitmap::at: index (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside " + std::to_string(h_) + "x" +
                                    std::to_string(w_));
        return tones_[static_cast<std::size_t>(i - 1) * w_ + (j - 1)];
    }

    const std::vector<std::uint8_t>& tones() const { return tones_; }

    bool operator==(const Bitmap&) const = default;

private:
    int h_, w_;
    std::vector<std::uint8_t> tones_;
};

// Coordinates of pixel (i, j): x = i, y = j, as reals. Throws std::out_of_range
// when the index is outside the bitmap.
inline std::pair<double, double> pixel_coordinates(const Bitmap& bm, int i, int j) {
    if (i < 1 || i > bm.height() || j < 1 || j > bm.width())
        throw std::out_of_range("pixel_coordinates: index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside bitmap");
    return {static_cast<double>(i), static_cast<double>(j)};
}

// h x w grid of finite reals (mean map, charge map, P map, Q map).
class ScalarField {
public:
    ScalarField(int height, int width, std::vector<double> values)
        : h_(height), w_(width), values_(std::move(values)) {
        if (h_ < 1 || w_ < 1)
            throw std::invalid_argument("ScalarField: dimensions must be positive");
        if (values_.size() != static_cast<std::size_t>(h_) * static_cast<std::size_t>(w_))
            throw std::invalid_argument("ScalarField: value grid size does not match dimensions");
        for (double v : values_)
            if (!std::isfinite(v))
                throw std::invalid_argument("ScalarField: non-finite entry");
    }

    int height() const { return h_; }
    int width() const { return w_; }

    double at(int i, int j) const {
        if (i < 1 || i > h_ || j < 1 || j > w_)
            throw std::out_of_range("ScalarField::at: index outside field");
        return values_[static_cast<std::size_t>(i - 1) * w_ + (j - 1)];
    }

    const std::vector<double>& values() const { return values_; }

    // Maximum entry, row-major scan. Computed on demand, never cached.
    double max_value() const {
        double m = values_[0];
        for (double v : values_)
            if (v > m) m = v;
        return m;
    }

    bool operator==(const ScalarField&) const = default;

private:
    int h_, w_;
    std::vector<double> values_;
};

// First moment of a signed charge distribution, units charge * length.
struct DipoleVector {
    double px = 0.0;
    double py = 0.0;

    bool operator==(const DipoleVector&) const = default;
};

// Symmetric traceless 2x2 tensor, units charge * length^2. The constructor
// enforces |qxx + qyy| <= 1e-9 * max(|qxx|, |qyy|, 1); traceless() builds the
// exactly-traceless tensor from the two free components.
struct QuadrupoleTensor {
    double qxx = 0.0;
    double qyy = 0.0;
    double qxy = 0.0;

    QuadrupoleTensor() = default;

    QuadrupoleTensor(double xx, double yy, double xy) : qxx(xx), qyy(yy), qxy(xy) {
        if (!std::isfinite(qxx) || !std::isfinite(qyy) || !std::isfinite(qxy))
            throw std::invalid_argument("QuadrupoleTensor: non-finite component");
        double scale = std::max({std::fabs(qxx), std::fabs(qyy), 1.0});
        if (std::fabs(qxx + qyy) > 1e-9 * scale)
            throw std::invalid_argument("QuadrupoleTensor: trace exceeds tolerance");
    }

    static QuadrupoleTensor traceless(double xx, double xy) {
        return QuadrupoleTensor(xx, -xx, xy);
    }

    bool operator==(const QuadrupoleTensor&) const = default;
};

namespace detail {

inline void check_finite(const DipoleVector& v) {
    if (!std::isfinite(v.px) || !std::isfinite(v.py))
        throw std::invalid_argument("DipoleField: non-finite component");
}

inline void check_finite(const QuadrupoleTensor& t) {
    if (!std::isfinite(t.qxx) || !std::isfinite(t.qyy) || !std::isfinite(t.qxy))
        throw std::invalid_argument("QuadrupoleField: non-finite component");
}

}  // namespace detail

// h x w grid of per-pixel moment values.
template <class Value>
class MomentField {
public:
    MomentField(int height, int width, std::vector<Value> values)
        : h_(height), w_(width), values_(std::move(values)) {
        if (h_ < 1 || w_ < 1)
            throw std::invalid_argument("MomentField: dimensions must be positive");
        if (values_.size() != static_cast<std::size_t>(h_) * static_cast<std::size_t>(w_))
            throw std::invalid_argument("MomentField: grid size does not match dimensions");
        for (const Value& v : values_) detail::check_finite(v);
    }

    int height() const { return h_; }
    int width() const { return w_; }

    const Value& at(int i, int j) const {
        if (i < 1 || i > h_ || j < 1 || j > w_)
            throw std::out_of_range("MomentField::at: index outside field");
        return values_[static_cast<std::size_t>(i - 1) * w_ + (j - 1)];
    }

    const std::vector<Value>& values() const { return values_; }

    bool operator==(const MomentField&) const = default;

private:
    int h_, w_;
    std::vector<Value> values_;
};

using DipoleField = MomentField<DipoleVector>;
using QuadrupoleField = MomentField<QuadrupoleTensor>;

}  // namespace momentedge
