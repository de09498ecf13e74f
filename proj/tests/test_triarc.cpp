#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "spheresub/triarc.hpp"

using namespace spheresub;

TEST_CASE("triarc on a single hexagon") {
    auto dc = make_disk_complex(fixtures::polygon_disk(6));
    auto p = triarc(dc, "v0", "v2", "v4");
    CHECK(fixtures::valid_uvw_path(dc.complex, p, "v0", "v2", "v4"));
    // must be the boundary arc through v2
    CHECK(p.vertices == std::vector<std::string>{"v0", "v1", "v2", "v3", "v4"});
}

TEST_CASE("triarc corner to corner through the center of a 2x2 grid") {
    auto dc = make_disk_complex(fixtures::grid_disk(2, 2));
    auto p = triarc(dc, "v0_0", "v1_1", "v2_2");
    CHECK(fixtures::valid_uvw_path(dc.complex, p, "v0_0", "v1_1", "v2_2"));
    CHECK(p.edges.size() >= 4);
    CHECK(fixtures::uvw_path_exists(dc.complex, "v0_0", "v1_1", "v2_2"));
}

TEST_CASE("triarc rejects bad input") {
    auto dc = make_disk_complex(fixtures::grid_disk(2, 2));
    CHECK_THROWS_AS(triarc(dc, "v0_0", "v0_0", "v2_2"), Error);
    CHECK_THROWS_AS(triarc(dc, "v0_0", "nope", "v2_2"), Error);
}

TEST_CASE("triarc exhaustive on the 3x3 grid") {
    auto dc = make_disk_complex(fixtures::grid_disk(3, 3));
    std::vector<std::string> ids;
    for (const auto& v : dc.complex.vertices) ids.push_back(v.id);
    size_t checked = 0;
    for (const auto& u : ids)
        for (const auto& v : ids)
            for (const auto& w : ids) {
                if (u == v || v == w || u == w) continue;
                auto p = triarc(dc, u, v, w);
                if (!fixtures::valid_uvw_path(dc.complex, p, u, v, w)) {
                    CAPTURE(u, v, w, p.vertices);
                    FAIL("invalid triarc path");
                }
                ++checked;
            }
    CHECK(checked == 16 * 15 * 14);
}

TEST_CASE("triarc exhaustive on polygons") {
    for (size_t n = 3; n <= 8; ++n) {
        auto dc = make_disk_complex(fixtures::polygon_disk(n));
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                for (size_t c = 0; c < n; ++c) {
                    if (a == b || b == c || a == c) continue;
                    std::string u = "v" + std::to_string(a);
                    std::string v = "v" + std::to_string(b);
                    std::string w = "v" + std::to_string(c);
                    auto p = triarc(dc, u, v, w);
                    if (!fixtures::valid_uvw_path(dc.complex, p, u, v, w)) {
                        CAPTURE(n, u, v, w);
                        FAIL("invalid polygon path");
                    }
                }
    }
    SUCCEED();
}
