// Sliding-window moment engine. One pass over the image with vertical prefix
// tables plus per-row horizontal prefix tables gives every window's weighted
// sums in O(1) per pixel, independent of window size. Boundary substitution
// is handled by decomposing each window's virtual index range into a few
// contiguous real segments plus repeated-index "masses", so the engine and
// the slot-by-slot reference path see exactly the same substituted windows.
//
// All intermediate sums here are integer-valued (tones and coordinates are
// small integers), so doubles carry them exactly and the only rounding is in
// the final divisions. That is what makes constant images come out exactly
// zero and brightness shifts cancel bit-for-bit in pixel-count mode.

#include "momentedge/moments.hpp"

#include <utility>
#include <vector>

namespace momentedge {

namespace {

struct Seg {
    int lo, hi;  // inclusive range of real indices
};

struct Mass {
    int idx;     // real index
    double cnt;  // how many window slots land on it
};

struct Runs {
    std::vector<Seg> segs;
    std::vector<Mass> masses;
};

// Decompose the virtual slot range [a, b] (which always contains at least one
// in-range index) into real-index runs under the boundary mode, extent n.
Runs fold_range(int a, int b, int n, Boundary mode) {
    Runs r;
    if (a >= 1 && b <= n) {
        r.segs.push_back({a, b});
        return r;
    }
    if (mode == Boundary::Clamp) {
        if (a < 1) r.masses.push_back({1, static_cast<double>(1 - a)});
        const int lo = std::max(a, 1), hi = std::min(b, n);
        if (lo <= hi) r.segs.push_back({lo, hi});
        if (b > n) r.masses.push_back({n, static_cast<double>(b - n)});
        return r;
    }
    if (mode == Boundary::Reflect && a >= 1 - n && b <= 2 * n) {
        // single fold on each side: the overhang maps onto a mirrored segment
        if (a < 1) r.segs.push_back({1, 1 - a});
        const int lo = std::max(a, 1), hi = std::min(b, n);
        if (lo <= hi) r.segs.push_back({lo, hi});
        if (b > n) r.segs.push_back({2 * n + 1 - b, n});
        return r;
    }
    // window deeper than one fold (extent comparable to or larger than the
    // image): count every slot individually
    std::vector<double> cnt(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = a; k <= b; ++k) cnt[static_cast<std::size_t>(boundary_fold(k, n, mode))] += 1.0;
    for (int idx = 1; idx <= n; ++idx)
        if (cnt[static_cast<std::size_t>(idx)] != 0.0) r.masses.push_back({idx, cnt[static_cast<std::size_t>(idx)]});
    return r;
}

// Per-row (or per-column) precomputed data: the folded runs and the sums of
// the substituted coordinates and their squares over the window slots.
struct AxisInfo {
    bool ok = true;  // false only in skip-border mode when the window exits
    Runs runs;
    double r1 = 0.0;  // sum of substituted indices
    double r2 = 0.0;  // sum of their squares
};

std::vector<AxisInfo> axis_table(int n, int extent, WindowAnchor anchor, Boundary mode) {
    const int back = anchor == WindowAnchor::CenteredOdd ? (extent - 1) / 2 : 0;
    std::vector<AxisInfo> table(static_cast<std::size_t>(n) + 1);
    for (int c = 1; c <= n; ++c) {
        AxisInfo& info = table[static_cast<std::size_t>(c)];
        const int a = c - back, b = a + extent - 1;
        if (mode == Boundary::SkipBorder && (a < 1 || b > n)) {
            info.ok = false;
            continue;
        }
        for (int k = a; k <= b; ++k) {
            const double idx = boundary_fold(k, n, mode);
            info.r1 += idx;
            info.r2 += idx * idx;
        }
        info.runs = fold_range(a, b, n, mode);
    }
    return table;
}

struct Sums {
    double s0 = 0, sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
};

// Visit(i, j, sums) for every pixel with a valid window; Zero(i, j) for
// pixels suppressed by skip-border.
template <class Visit, class Zero>
void sweep(const Bitmap& bm, const PipelineConfig& cfg, Visit&& visit, Zero&& zero) {
    const int h = bm.height(), w = bm.width();
    const std::uint8_t* tones = bm.tones().data();
    const auto tone = [&](int i, int j) -> double {
        return tones[static_cast<std::size_t>(i - 1) * w + (j - 1)];
    };

    // vertical prefixes over rows 0..h (row 0 all zero): tone, tone*row, tone*row^2
    const std::size_t stride = static_cast<std::size_t>(w);
    std::vector<double> p0((static_cast<std::size_t>(h) + 1) * stride, 0.0);
    std::vector<double> p1(p0.size(), 0.0), p2(p0.size(), 0.0);
    for (int k = 1; k <= h; ++k) {
        const std::size_t row = static_cast<std::size_t>(k) * stride, prev = row - stride;
        for (int l = 1; l <= w; ++l) {
            const double b = tone(k, l);
            const std::size_t at = row + static_cast<std::size_t>(l - 1);
            p0[at] = p0[prev + (l - 1)] + b;
            p1[at] = p1[prev + (l - 1)] + b * k;
            p2[at] = p2[prev + (l - 1)] + b * k * k;
        }
    }

    const auto rows = axis_table(h, cfg.window_height, cfg.anchor, cfg.boundary);
    const auto cols = axis_table(w, cfg.window_width, cfg.anchor, cfg.boundary);

    // per-row accumulators: column sums of tone, tone*x, tone*x^2 over the
    // window's row slots, then six horizontal prefix tables over them
    std::vector<double> colT(stride + 1, 0.0), colTx(stride + 1, 0.0), colTxx(stride + 1, 0.0);
    std::vector<double> ht0(stride + 1), hty(stride + 1), htyy(stride + 1);
    std::vector<double> hx0(stride + 1), hxy(stride + 1), hxx(stride + 1);

    for (int i = 1; i <= h; ++i) {
        const AxisInfo& ri = rows[static_cast<std::size_t>(i)];
        if (!ri.ok) {
            for (int j = 1; j <= w; ++j) zero(i, j);
            continue;
        }

        std::fill(colT.begin(), colT.end(), 0.0);
        std::fill(colTx.begin(), colTx.end(), 0.0);
        std::fill(colTxx.begin(), colTxx.end(), 0.0);
        for (const Seg& s : ri.runs.segs) {
            const std::size_t top = static_cast<std::size_t>(s.lo - 1) * stride;
            const std::size_t bot = static_cast<std::size_t>(s.hi) * stride;
            for (int l = 1; l <= w; ++l) {
                const std::size_t off = static_cast<std::size_t>(l - 1);
                colT[static_cast<std::size_t>(l)] += p0[bot + off] - p0[top + off];
                colTx[static_cast<std::size_t>(l)] += p1[bot + off] - p1[top + off];
                colTxx[static_cast<std::size_t>(l)] += p2[bot + off] - p2[top + off];
            }
        }
        for (const Mass& m : ri.runs.masses) {
            const double x = m.idx;
            for (int l = 1; l <= w; ++l) {
                const double b = m.cnt * tone(m.idx, l);
                colT[static_cast<std::size_t>(l)] += b;
                colTx[static_cast<std::size_t>(l)] += b * x;
                colTxx[static_cast<std::size_t>(l)] += b * x * x;
            }
        }

        ht0[0] = hty[0] = htyy[0] = hx0[0] = hxy[0] = hxx[0] = 0.0;
        for (int l = 1; l <= w; ++l) {
            const std::size_t at = static_cast<std::size_t>(l);
            const double y = l;
            ht0[at] = ht0[at - 1] + colT[at];
            hty[at] = hty[at - 1] + colT[at] * y;
            htyy[at] = htyy[at - 1] + colT[at] * y * y;
            hx0[at] = hx0[at - 1] + colTx[at];
            hxy[at] = hxy[at - 1] + colTx[at] * y;
            hxx[at] = hxx[at - 1] + colTxx[at];
        }

        for (int j = 1; j <= w; ++j) {
            const AxisInfo& ci = cols[static_cast<std::size_t>(j)];
            if (!ci.ok) {
                zero(i, j);
                continue;
            }
            Sums s;
            for (const Seg& sg : ci.runs.segs) {
                const std::size_t lo = static_cast<std::size_t>(sg.lo), hi = static_cast<std::size_t>(sg.hi);
                s.s0 += ht0[hi] - ht0[lo - 1];
                s.sy += hty[hi] - hty[lo - 1];
                s.syy += htyy[hi] - htyy[lo - 1];
                s.sx += hx0[hi] - hx0[lo - 1];
                s.sxy += hxy[hi] - hxy[lo - 1];
                s.sxx += hxx[hi] - hxx[lo - 1];
            }
            for (const Mass& m : ci.runs.masses) {
                const std::size_t at = static_cast<std::size_t>(m.idx);
                const double y = m.idx;
                s.s0 += m.cnt * colT[at];
                s.sy += m.cnt * colT[at] * y;
                s.syy += m.cnt * colT[at] * y * y;
                s.sx += m.cnt * colTx[at];
                s.sxy += m.cnt * colTx[at] * y;
                s.sxx += m.cnt * colTxx[at];
            }
            visit(i, j, s, ri, ci);
        }
    }
}

}  // namespace

ScalarField local_mean_map(const Bitmap& bm, const PipelineConfig& cfg) {
    cfg.validate();
    const int h = bm.height(), w = bm.width();
    const double d = cfg.normalizer(static_cast<long long>(cfg.window_height) * cfg.window_width);
    std::vector<double> out(static_cast<std::size_t>(h) * w, 0.0);
    const auto at = [&](int i, int j) -> double& {
        return out[static_cast<std::size_t>(i - 1) * w + (j - 1)];
    };
    sweep(
        bm, cfg,
        [&](int i, int j, const Sums& s, const AxisInfo&, const AxisInfo&) { at(i, j) = s.s0 / d; },
        [](int, int) {});
    return ScalarField(h, w, std::move(out));
}

ScalarField charge_map(const Bitmap& bm, const PipelineConfig& cfg) {
    cfg.validate();
    const int h = bm.height(), w = bm.width();
    const double d = cfg.normalizer(static_cast<long long>(cfg.window_height) * cfg.window_width);
    std::vector<double> out(static_cast<std::size_t>(h) * w, 0.0);
    const std::uint8_t* tones = bm.tones().data();
    sweep(
        bm, cfg,
        [&](int i, int j, const Sums& s, const AxisInfo&, const AxisInfo&) {
            const double b = tones[static_cast<std::size_t>(i - 1) * w + (j - 1)];
            // d*b - s0 is exact, so a uniform tone shift cancels before rounding
            out[static_cast<std::size_t>(i - 1) * w + (j - 1)] = (d * b - s.s0) / d;
        },
        [](int, int) {});
    return ScalarField(h, w, std::move(out));
}

MomentFields fast_moment_fields(const Bitmap& bm, const PipelineConfig& cfg) {
    cfg.validate();
    const int h = bm.height(), w = bm.width();
    const double nr = cfg.window_height, nc = cfg.window_width;
    const double cslots = nr * nc;
    const double d = cfg.normalizer(static_cast<long long>(cfg.window_height) * cfg.window_width);
    const double f = cfg.qxy_factor;
    const bool centered_origin = cfg.origin == Origin::WindowCenter;

    std::vector<DipoleVector> dip(static_cast<std::size_t>(h) * w);
    std::vector<QuadrupoleTensor> quad(static_cast<std::size_t>(h) * w);

    sweep(
        bm, cfg,
        [&](int i, int j, const Sums& s, const AxisInfo& ri, const AxisInfo& ci) {
            const std::size_t idx = static_cast<std::size_t>(i - 1) * w + (j - 1);
            const double t = s.s0;
            // window sums of plain coordinates: each row index appears once
            // per column slot and vice versa
            const double cx = nc * ri.r1, cy = nr * ci.r1;
            const double cxx = nc * ri.r2, cyy = nr * ci.r2;
            const double cxy = ri.r1 * ci.r1;
            // a* = d * (charge-weighted sum); every term here is still exact
            const double a0 = t * (d - cslots);
            const double ax = d * s.sx - t * cx;
            const double ay = d * s.sy - t * cy;
            const double axx = d * s.sxx - t * cxx;
            const double ayy = d * s.syy - t * cyy;
            const double axy = d * s.sxy - t * cxy;
            const double dd = d * d;
            double px, py, qxx, qxy;
            if (!centered_origin) {
                px = ax / dd;
                py = ay / dd;
                qxx = (axx - ayy) / dd;
                qxy = f * axy / dd;
            } else {
                const double rx = ri.r1, ry = ci.r1;
                px = (nr * ax - rx * a0) / (dd * nr);
                py = (nc * ay - ry * a0) / (dd * nc);
                const double numxx = nc * nc * (nr * nr * axx - 2.0 * nr * rx * ax + rx * rx * a0) -
                                     nr * nr * (nc * nc * ayy - 2.0 * nc * ry * ay + ry * ry * a0);
                qxx = numxx / (dd * nr * nr * nc * nc);
                const double numxy = nr * nc * axy - nr * ry * ax - nc * rx * ay + rx * ry * a0;
                qxy = f * numxy / (dd * nr * nc);
            }
            dip[idx] = {px, py};
            quad[idx] = QuadrupoleTensor::traceless(qxx, qxy);
        },
        [&](int i, int j) {
            const std::size_t idx = static_cast<std::size_t>(i - 1) * w + (j - 1);
            dip[idx] = {0.0, 0.0};
            quad[idx] = QuadrupoleTensor();
        });

    return {DipoleField(h, w, std::move(dip)), QuadrupoleField(h, w, std::move(quad))};
}

}  // namespace momentedge
