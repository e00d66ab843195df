#pragma once

// Shaded-alcove data for the rank-2 figures: band coordinates of the
// eta' images, grouped into F-action orbits (one group per fill color).
// Band order follows the library's positive-root order (height, lex).

#include <vector>

namespace figure_data {

inline const std::vector<std::vector<std::vector<long>>> kA2Orbits = {
    {{0, 0, 0}},
    {{-1, 0, -1}, {0, 1, 1}, {1, -1, 0}},
    {{-1, 0, 0}, {0, 1, 2}, {1, -1, 1}},
    {{-1, 1, 0}, {0, -1, -1}, {1, 0, 1}},
    {{-1, 1, 1}, {0, -1, 0}, {1, 0, 2}},
    {{-2, 1, 0}, {-1, -1, -1}, {-1, 2, 2}, {1, -2, 0}, {1, 1, 3}, {2, -1, 2}},
};

inline const std::vector<std::vector<std::vector<long>>> kB2Orbits = {
    {{0, 0, 0, 0}},
    {{-1, 0, -1, -1}, {-1, 2, 1, 1}, {1, -2, -1, 1}, {1, 0, 1, 3}},
    {{-1, 0, 0, -1}, {-1, 2, 2, 1}, {1, -2, 0, 1}, {1, 0, 2, 3}},
    {{-1, 0, 0, 0}, {-1, 2, 2, 2}, {1, -2, 0, 2}, {1, 0, 2, 4}},
    {{-1, 1, 0, -1}, {0, -1, -1, -1}, {0, 1, 1, 1}, {1, -1, 0, 1}},
    {{-1, 1, 0, 0}, {0, -1, -1, 0}, {0, 1, 1, 2}, {1, -1, 0, 2}},
    {{-1, 1, 1, 0}, {0, -1, 0, 0}, {0, 1, 2, 2}, {1, -1, 1, 2}},
    {{-2, 1, 0, -1}, {-2, 3, 2, 1}, {-1, -1, -1, -1}, {-1, 3, 3, 3}, {1, -3, -1, 1}, {1, 1, 3, 5}, {2, -3, 0, 3}, {2, -1, 2, 5}},
};

}  // namespace figure_data
