#include "momentedge/moments.hpp"

namespace momentedge {

DipoleVector global_dipole(const Bitmap& bm) {
    const int h = bm.height(), w = bm.width();
    double sx = 0.0, sy = 0.0;
    for (int i = 1; i <= h; ++i) {
        for (int j = 1; j <= w; ++j) {
            const double b = bm.at(i, j);
            sx += b * i;
            sy += b * j;
        }
    }
    const double n = static_cast<double>(h) * w;
    return {sx / n, sy / n};
}

QuadrupoleTensor global_quadrupole(const Bitmap& bm) {
    const int h = bm.height(), w = bm.width();
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (int i = 1; i <= h; ++i) {
        for (int j = 1; j <= w; ++j) {
            const double b = bm.at(i, j);
            const double x = i, y = j;
            const double r2 = x * x + y * y;
            sxx += b * (2.0 * x * x - r2);
            syy += b * (2.0 * y * y - r2);
            sxy += b * (2.0 * x * y);
        }
    }
    const double n = static_cast<double>(h) * w;
    // (2x^2 - r^2) and (2y^2 - r^2) negate each other per pixel, so the trace
    // is exactly zero and the checked constructor accepts it.
    return QuadrupoleTensor(sxx / n, syy / n, sxy / n);
}

namespace {

double window_tone_sum(const Bitmap& bm, const WindowSpec& win) {
    double t = 0.0;
    for (int r : win.rows)
        for (int c : win.cols) t += bm.at(r, c);
    return t;
}

}  // namespace

double local_mean(const Bitmap& bm, const WindowSpec& win, const PipelineConfig& cfg) {
    cfg.validate();
    return window_tone_sum(bm, win) / cfg.normalizer(win.count);
}

DipoleField local_dipole_field(const Bitmap& bm, const PipelineConfig& cfg) {
    cfg.validate();
    const int h = bm.height(), w = bm.width();
    std::vector<DipoleVector> out(static_cast<std::size_t>(h) * w);
    for (int i = 1; i <= h; ++i) {
        for (int j = 1; j <= w; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i - 1) * w + (j - 1);
            if (cfg.boundary == Boundary::SkipBorder && !window_fits(cfg, bm, i, j)) continue;
            const WindowSpec win = resolve_window(cfg, bm, i, j);
            const double d = cfg.normalizer(win.count);
            const double t = window_tone_sum(bm, win);
            const double ox = cfg.origin == Origin::WindowCenter ? win.centroid_x : 0.0;
            const double oy = cfg.origin == Origin::WindowCenter ? win.centroid_y : 0.0;
            double apx = 0.0, apy = 0.0;
            for (int r : win.rows) {
                for (int c : win.cols) {
                    // charge relative to this window's mean; d*b - t is exact
                    const double q = (d * bm.at(r, c) - t) / d;
                    apx += q * (r - ox);
                    apy += q * (c - oy);
                }
            }
            out[idx] = {apx / d, apy / d};
        }
    }
    return DipoleField(h, w, std::move(out));
}

QuadrupoleField local_quadrupole_field(const Bitmap& bm, const PipelineConfig& cfg) {
    cfg.validate();
    const int h = bm.height(), w = bm.width();
    const double f = cfg.qxy_factor;
    std::vector<QuadrupoleTensor> out(static_cast<std::size_t>(h) * w);
    for (int i = 1; i <= h; ++i) {
        for (int j = 1; j <= w; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i - 1) * w + (j - 1);
            if (cfg.boundary == Boundary::SkipBorder && !window_fits(cfg, bm, i, j)) continue;
            const WindowSpec win = resolve_window(cfg, bm, i, j);
            const double d = cfg.normalizer(win.count);
            const double t = window_tone_sum(bm, win);
            const double ox = cfg.origin == Origin::WindowCenter ? win.centroid_x : 0.0;
            const double oy = cfg.origin == Origin::WindowCenter ? win.centroid_y : 0.0;
            double axx = 0.0, axy = 0.0;
            for (int r : win.rows) {
                for (int c : win.cols) {
                    const double q = (d * bm.at(r, c) - t) / d;
                    const double x = r - ox, y = c - oy;
                    axx += q * (x * x - y * y);
                    axy += q * (f * x * y);
                }
            }
            out[idx] = QuadrupoleTensor::traceless(axx / d, axy / d);
        }
    }
    return QuadrupoleField(h, w, std::move(out));
}

}  // namespace momentedge
