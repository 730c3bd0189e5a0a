#include "momentedge/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "momentedge/config.hpp"
#include "momentedge/moments.hpp"
#include "momentedge/pgm.hpp"
#include "momentedge/pipeline.hpp"

namespace momentedge {

namespace {

bool parse_window_size(const std::string& s, int& h, int& w) {
    const std::size_t x = s.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= s.size()) return false;
    const auto to_int = [](const std::string& part, int& out) {
        if (part.empty() || part.size() > 6) return false;
        long v = 0;
        for (char c : part) {
            if (c < '0' || c > '9') return false;
            v = v * 10 + (c - '0');
        }
        if (v < 1) return false;
        out = static_cast<int>(v);
        return true;
    };
    return to_int(s.substr(0, x), h) && to_int(s.substr(x + 1), w);
}

// write-temp-then-rename so an interrupted run never leaves a truncated file
void write_bytes_atomic(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw std::runtime_error("write failure on " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw std::runtime_error("cannot rename " + tmp + " to " + path + ": " + ec.message());
    }
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// "height width" first line, then row-major values, 9 significant digits
template <class Get>
std::string grid_text(int h, int w, Get&& get) {
    std::string s = std::to_string(h) + " " + std::to_string(w) + "\n";
    char buf[40];
    for (int i = 1; i <= h; ++i) {
        for (int j = 1; j <= w; ++j) {
            std::snprintf(buf, sizeof buf, "%.8e", get(i, j));
            s += buf;
            s += (j == w ? '\n' : ' ');
        }
    }
    return s;
}

void write_text_atomic(const std::string& path, const std::string& text) {
    write_bytes_atomic(path, std::vector<std::uint8_t>(text.begin(), text.end()));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local dipole/quadrupole moment maps and edge detection for PGM images"};

    std::string input;
    std::string out_dipole, out_quadrupole, dump_dir;
    std::string window = "2x2", anchor_str, boundary_str = "clamp";
    std::string origin_str = "window-center", norm_str = "pixel-count", format_str = "P5";
    int qxy_factor = 2;
    double alpha = 0.5, beta = 0.25;
    bool want_global = false;

    app.add_option("input", input, "input image, PGM P2 or P5")->required();
    app.add_option("--out-dipole", out_dipole, "write the tone-mapped dipole-magnitude map here");
    app.add_option("--out-quadrupole", out_quadrupole,
                   "write the tone-mapped quadrupole-determinant map here");
    app.add_option("--dump-fields", dump_dir,
                   "directory for numeric text grids M, q, px, py, qxx, qxy");
    app.add_option("--window", window, "window size HxW (default 2x2)");
    app.add_option("--anchor", anchor_str,
                   "centered-odd | topleft-even (default: inferred from window parity)");
    app.add_option("--boundary", boundary_str, "clamp | reflect | skip-border (default clamp)");
    app.add_option("--origin", origin_str, "window-center | absolute (default window-center)");
    app.add_option("--qxy-factor", qxy_factor, "quadrupole cross-term factor, 2 or 1 (default 2)");
    app.add_option("--alpha", alpha, "dipole tone-map exponent (default 0.5)");
    app.add_option("--beta", beta, "quadrupole tone-map exponent (default 0.25)");
    app.add_option("--mean-norm", norm_str, "pixel-count | 4didj (default pixel-count)");
    app.add_option("--format", format_str, "output PGM format, P2 | P5 (default P5)");
    app.add_flag("--global", want_global, "print whole-image dipole and quadrupole to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    // validate everything before touching any file
    PipelineConfig cfg;
    PgmFormat format;
    try {
        if (!parse_window_size(window, cfg.window_height, cfg.window_width))
            throw ConfigError("bad --window '" + window + "' (expected HxW, e.g. 2x2)");
        if (anchor_str.empty())
            cfg.anchor = (cfg.window_height % 2 == 1 && cfg.window_width % 2 == 1)
                             ? WindowAnchor::CenteredOdd
                             : WindowAnchor::TopleftEven;
        else
            cfg.anchor = parse_anchor(anchor_str);
        cfg.boundary = parse_boundary(boundary_str);
        cfg.origin = parse_origin(origin_str);
        cfg.mean_normalization = parse_mean_normalization(norm_str);
        cfg.qxy_factor = qxy_factor;
        cfg.alpha = alpha;
        cfg.beta = beta;
        cfg.validate();
        if (format_str == "P2")
            format = PgmFormat::P2;
        else if (format_str == "P5")
            format = PgmFormat::P5;
        else
            throw ConfigError("bad --format '" + format_str + "' (expected P2 or P5)");
        if (out_dipole.empty() && out_quadrupole.empty() && dump_dir.empty() && !want_global)
            throw ConfigError(
                "nothing to do: request --out-dipole, --out-quadrupole, --dump-fields or --global");
    } catch (const ConfigError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        const Bitmap bm = read_pgm_file(input);

        if (want_global) {
            const DipoleVector d = global_dipole(bm);
            const QuadrupoleTensor t = global_quadrupole(bm);
            out << format_value(d.px) << " " << format_value(d.py) << "\n";
            out << format_value(t.qxx) << " " << format_value(t.qyy) << " "
                << format_value(t.qxy) << "\n";
        }

        if (!out_dipole.empty() || !out_quadrupole.empty()) {
            const EdgeResult result = detect_edges(bm, cfg);
            if (!out_dipole.empty())
                write_bytes_atomic(out_dipole, write_pgm(result.dipole_bitmap, format));
            if (!out_quadrupole.empty())
                write_bytes_atomic(out_quadrupole, write_pgm(result.quadrupole_bitmap, format));
        }

        if (!dump_dir.empty()) {
            std::filesystem::create_directories(dump_dir);
            const std::filesystem::path dir(dump_dir);
            const int h = bm.height(), w = bm.width();
            const ScalarField mean = local_mean_map(bm, cfg);
            const ScalarField charge = charge_map(bm, cfg);
            const MomentFields fields = fast_moment_fields(bm, cfg);
            const auto scalar_at = [](const ScalarField& f) {
                return [&f](int i, int j) { return f.at(i, j); };
            };
            write_text_atomic((dir / "M.txt").string(), grid_text(h, w, scalar_at(mean)));
            write_text_atomic((dir / "q.txt").string(), grid_text(h, w, scalar_at(charge)));
            write_text_atomic((dir / "px.txt").string(),
                              grid_text(h, w, [&](int i, int j) { return fields.dipole.at(i, j).px; }));
            write_text_atomic((dir / "py.txt").string(),
                              grid_text(h, w, [&](int i, int j) { return fields.dipole.at(i, j).py; }));
            write_text_atomic((dir / "qxx.txt").string(), grid_text(h, w, [&](int i, int j) {
                                  return fields.quadrupole.at(i, j).qxx;
                              }));
            write_text_atomic((dir / "qxy.txt").string(), grid_text(h, w, [&](int i, int j) {
                                  return fields.quadrupole.at(i, j).qxy;
                              }));
        }
    } catch (const ParseError& e) {
        err << input << ": parse error at byte " << e.offset() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace momentedge
