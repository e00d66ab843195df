#include <catch2/catch_amalgamated.hpp>

#include "coxalc/svg.hpp"
#include "figure_data.hpp"

using namespace coxalc;

namespace {

// band tuples of an orbit list, sorted, for comparison with the frozen data
std::vector<std::vector<std::vector<long>>> orbit_bands(const AlcoveGeometry& G,
                                                        const FigureModel& fm) {
    std::vector<std::vector<std::vector<long>>> out;
    for (const auto& orbit : fm.shaded_orbits) {
        std::vector<std::vector<long>> cells;
        for (const auto& x : orbit) cells.push_back(G.bands(x));
        std::sort(cells.begin(), cells.end());
        out.push_back(std::move(cells));
    }
    std::sort(out.begin(), out.end());
    return out;
}

size_t count_substr(const std::string& s, const std::string& needle) {
    size_t n = 0;
    for (size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("A2 figure matches the frozen diagram data") {
    WeylGroup W(cartan_datum("A2"));
    AlcoveGeometry G(W);
    CategoryO C(W);
    FigureModel fm = figure_model(G, C, 8);
    CHECK(fm.shaded_count() == 19);
    CHECK(fm.xi_fin.size() == 6);
    auto got = orbit_bands(G, fm);
    auto want = figure_data::kA2Orbits;
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("B2 figure matches the frozen diagram data") {
    WeylGroup W(cartan_datum("B2"));
    AlcoveGeometry G(W);
    CategoryO C(W);
    FigureModel fm = figure_model(G, C, 10);
    CHECK(fm.shaded_count() == 33);
    CHECK(fm.xi_fin.size() == 8);
    auto got = orbit_bands(G, fm);
    auto want = figure_data::kB2Orbits;
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("G2 figure counts (generated, no published oracle)") {
    WeylGroup W(cartan_datum("G2"));
    AlcoveGeometry G(W);
    CategoryO C(W);
    FigureModel fm = figure_model(G, C, 12);
    CHECK(fm.shaded_count() == 73);
    CHECK(fm.xi_fin.size() == 12);
    std::multiset<size_t> sizes;
    for (const auto& o : fm.shaded_orbits) sizes.insert(o.size());
    CHECK(sizes == std::multiset<size_t>({1, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 12}));
}

TEST_CASE("SVG output is deterministic and carries the model") {
    WeylGroup W(cartan_datum("A2"));
    AlcoveGeometry G(W);
    CategoryO C(W);
    FigureModel fm = figure_model(G, C, 8);
    std::string svg1 = render_svg(G, fm);
    std::string svg2 = render_svg(G, figure_model(G, C, 8));
    CHECK(svg1 == svg2);
    CHECK(count_substr(svg1, "class=\"shaded\"") == 19);
    CHECK(count_substr(svg1, "class=\"fundamental\"") == 6);
    CHECK(count_substr(svg1, "class=\"base\"") == 1);
    CHECK(svg1.find("<svg") == 0);
}
