#include "momentedge/pipeline.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace momentedge {

ScalarField dipole_magnitude_map(const DipoleField& field) {
    const int h = field.height(), w = field.width();
    std::vector<double> out(field.values().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const DipoleVector& v = field.values()[k];
        out[k] = std::sqrt(v.px * v.px + v.py * v.py);
    }
    return ScalarField(h, w, std::move(out));
}

ScalarField quadrupole_det_map(const QuadrupoleField& field) {
    const int h = field.height(), w = field.width();
    std::vector<double> out(field.values().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const QuadrupoleTensor& t = field.values()[k];
        out[k] = std::fabs(t.qxx * t.qyy - t.qxy * t.qxy);
    }
    return ScalarField(h, w, std::move(out));
}

Bitmap tone_map(const ScalarField& field, double exponent) {
    if (!std::isfinite(exponent) || exponent <= 0.0)
        throw std::domain_error("tone_map: exponent must be finite and positive");
    for (double v : field.values())
        if (v < 0.0) throw std::domain_error("tone_map: field values must be non-negative");
    const double vmax = field.max_value();
    std::vector<std::uint8_t> tones(field.values().size(), 0);
    if (vmax > 0.0) {
        for (std::size_t k = 0; k < tones.size(); ++k) {
            const double scaled = 255.0 * std::pow(field.values()[k] / vmax, exponent);
            // round half up, then clamp in case of rounding spill at the top
            const double r = std::floor(scaled + 0.5);
            tones[k] = static_cast<std::uint8_t>(r < 0.0 ? 0.0 : (r > 255.0 ? 255.0 : r));
        }
    }
    return Bitmap(field.height(), field.width(), std::move(tones));
}

EdgeResult detect_edges(const Bitmap& bm, const PipelineConfig& cfg) {
    cfg.validate();
    const MomentFields fields = fast_moment_fields(bm, cfg);
    ScalarField p = dipole_magnitude_map(fields.dipole);
    ScalarField q = quadrupole_det_map(fields.quadrupole);
    const double p_max = p.max_value();
    const double q_max = q.max_value();
    Bitmap dip = tone_map(p, cfg.alpha);
    Bitmap quad = tone_map(q, cfg.beta);
    return {std::move(p), std::move(q), p_max, q_max, std::move(dip), std::move(quad)};
}

}  // namespace momentedge
