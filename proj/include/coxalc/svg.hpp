#pragma once

// Rank-2 alcove pictures: all alcoves within a window, with the eta' images
// of the simple objects shaded by F-orbit, the fundamental alcoves stroked
// bold, and the base alcove tagged.  Geometry is exact until the final
// coordinate formatting; output is deterministic for a fixed configuration.

#include "cato.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace coxalc {

struct FigureModel {
    std::vector<AffineElt> background;                // window alcoves (sorted)
    std::vector<std::vector<AffineElt>> shaded_orbits; // eta' images by F-orbit
    std::vector<AffineElt> xi_fin;
    AffineElt base;

    size_t shaded_count() const {
        size_t n = 0;
        for (const auto& o : shaded_orbits) n += o.size();
        return n;
    }
};

inline FigureModel figure_model(const AlcoveGeometry& G, const CategoryO& C, long radius) {
    if (G.rank() != 2) throw std::invalid_argument("figure_model: rank-2 types only");
    FigureModel fm;
    fm.background = G.window(radius);
    for (const auto& orbit : C.f_orbits()) {
        std::vector<AffineElt> cells;
        for (const auto& s : orbit) cells.push_back(C.eta_prime_alcove(G, s));
        std::sort(cells.begin(), cells.end());
        fm.shaded_orbits.push_back(std::move(cells));
    }
    std::sort(fm.shaded_orbits.begin(), fm.shaded_orbits.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    for (const auto& w : G.group().enumerate()) fm.xi_fin.push_back(G.alcove_of_index(w));
    std::sort(fm.xi_fin.begin(), fm.xi_fin.end());
    fm.base = G.identity();
    return fm;
}

namespace detail {

// Cartesian realizations of the simple roots for the rank-2 drawings.
inline void simple_roots_xy(const std::string& label, double r[2][2]) {
    if (label == "A2") {
        r[0][0] = 1.0, r[0][1] = 0.0;
        r[1][0] = -0.5, r[1][1] = std::sqrt(3.0) / 2.0;
    } else if (label == "B2") {
        r[0][0] = 1.0, r[0][1] = -1.0;
        r[1][0] = 0.0, r[1][1] = 1.0;
    } else if (label == "C2") {
        r[0][0] = 1.0, r[0][1] = -1.0;
        r[1][0] = 0.0, r[1][1] = 2.0;
    } else if (label == "G2") {
        r[0][0] = 1.0, r[0][1] = 0.0;
        r[1][0] = -1.5, r[1][1] = std::sqrt(3.0) / 2.0;
    } else {
        throw std::invalid_argument("no drawing realization for type " + label);
    }
}

struct Embedding {
    // columns: fundamental coweights in the plane
    double m[2][2];

    static Embedding make(const std::string& label) {
        double a[2][2];
        simple_roots_xy(label, a);
        // solve <alpha_j, omega_i> = delta_ij with <alpha, x> = 2 (alpha.x)/|alpha|^2
        Embedding e{};
        for (int i = 0; i < 2; ++i) {
            // 2 x 2 system: (alpha_j . w) = delta_ij |alpha_j|^2 / 2
            double b0 = (0 == i ? 1.0 : 0.0) * (a[0][0] * a[0][0] + a[0][1] * a[0][1]) / 2.0;
            double b1 = (1 == i ? 1.0 : 0.0) * (a[1][0] * a[1][0] + a[1][1] * a[1][1]) / 2.0;
            double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
            e.m[0][i] = (b0 * a[1][1] - a[0][1] * b1) / det;
            e.m[1][i] = (a[0][0] * b1 - b0 * a[1][0]) / det;
        }
        return e;
    }

    std::pair<double, double> to_xy(const Rat& c0, const Rat& c1) const {
        double x0 = boost::rational_cast<double>(c0);
        double x1 = boost::rational_cast<double>(c1);
        return {m[0][0] * x0 + m[0][1] * x1, -(m[1][0] * x0 + m[1][1] * x1)};
    }
};

inline std::vector<std::pair<double, double>> alcove_polygon(const AlcoveGeometry& G,
                                                             const Embedding& e,
                                                             const AffineElt& x) {
    // vertices of A+ are 0 and omega_i^vee / m_i
    const auto& d = G.group().datum();
    std::vector<std::vector<Rat>> verts;
    verts.push_back({Rat(0), Rat(0)});
    for (size_t i = 0; i < 2; ++i) {
        std::vector<Rat> v(2, Rat(0));
        v[i] = Rat(1, d.marks[i]);
        verts.push_back(v);
    }
    std::vector<std::pair<double, double>> out;
    for (const auto& v : verts) {
        // x(v) = w(v) + t
        std::vector<Rat> img = matop::apply(x.w.point_matrix(), v, 2);
        img[0] += Rat(x.t[0]);
        img[1] += Rat(x.t[1]);
        out.push_back(e.to_xy(img[0], img[1]));
    }
    return out;
}

inline const char* kPalette[12] = {"#d62728", "#ff7f0e", "#e8c62c", "#2ca02c", "#1f77b4",
                                   "#9467bd", "#8c564b", "#17becf", "#bcbd22", "#7f7f7f",
                                   "#e377c2", "#aec7e8"};

}  // namespace detail

inline std::string render_svg(const AlcoveGeometry& G, const FigureModel& fm) {
    const std::string& label = G.group().datum().label;
    detail::Embedding emb = detail::Embedding::make(label);

    auto poly_points = [&](const AffineElt& x) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(4);
        bool first = true;
        for (auto [px, py] : detail::alcove_polygon(G, emb, x)) {
            if (!first) os << " ";
            first = false;
            os << px << "," << py;
        }
        return os.str();
    };

    // bounding box over the background
    double minx = 1e9, miny = 1e9, maxx = -1e9, maxy = -1e9;
    for (const auto& x : fm.background)
        for (auto [px, py] : detail::alcove_polygon(G, emb, x)) {
            minx = std::min(minx, px), maxx = std::max(maxx, px);
            miny = std::min(miny, py), maxy = std::max(maxy, py);
        }
    double pad = 0.2;

    std::ostringstream svg;
    svg << std::fixed << std::setprecision(4);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (minx - pad) << " "
        << (miny - pad) << " " << (maxx - minx + 2 * pad) << " " << (maxy - miny + 2 * pad)
        << "\" width=\"760\" height=\"760\">\n";
    svg << "<g stroke=\"#888888\" stroke-width=\"0.02\" fill=\"none\">\n";
    for (const auto& x : fm.background)
        svg << "  <polygon class=\"alcove\" points=\"" << poly_points(x) << "\"/>\n";
    svg << "</g>\n";
    size_t ci = 0;
    for (const auto& orbit : fm.shaded_orbits) {
        const char* color = detail::kPalette[ci % 12];
        ++ci;
        svg << "<g fill=\"" << color << "\" fill-opacity=\"0.85\" stroke=\"#555555\" stroke-width=\"0.02\">\n";
        for (const auto& x : orbit)
            svg << "  <polygon class=\"shaded\" points=\"" << poly_points(x) << "\"/>\n";
        svg << "</g>\n";
    }
    svg << "<g stroke=\"#000000\" stroke-width=\"0.06\" fill=\"none\">\n";
    for (const auto& x : fm.xi_fin)
        svg << "  <polygon class=\"fundamental\" points=\"" << poly_points(x) << "\"/>\n";
    svg << "</g>\n";
    // tag the base alcove with a dot at its barycenter
    {
        auto b = G.barycenter_scaled(fm.base);
        long den = G.barycenter_denominator();
        auto [bx, by] = emb.to_xy(Rat(b[0], den), Rat(b[1], den));
        svg << "<circle class=\"base\" cx=\"" << bx << "\" cy=\"" << by
            << "\" r=\"0.07\" fill=\"#d62728\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace coxalc
