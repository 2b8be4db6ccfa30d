#include <doctest.h>
#include <omp.h>

#include <cmath>

#include "wormbound/bounds.hpp"
#include "wormbound/configuration.hpp"
#include "wormbound/error.hpp"
#include "wormbound/reference.hpp"
#include "wormbound/search.hpp"

using namespace wormbound;

namespace {

// Small box around the optimum, 5 x 5 x 6 x 5 x 5 x 6 nodes.
Stage near_optimum_stage() {
    return {{{0.64, 0.68}, {0.17, 0.21}, {1.28, 1.33}, {0.72, 0.76}, {0.11, 0.15}, {1.61, 1.66}}, 0.01, 0.01};
}

// Six nodes per axis (46656 in all) over a wider patch, many of them outside K2.
Stage six_per_axis_stage() {
    return {{{0.5, 0.7}, {0.03, 0.23}, {0.8, 1.025}, {0.6, 0.8}, {-0.05, 0.15}, {1.46, 1.685}}, 0.04, 0.045};
}


constexpr GridSearchOptions kNoPrune{.enforce_domain = true, .area_prune = false, .bound_prune = false, .incumbent = {}};

}  // namespace

TEST_CASE("axis_count and grid_axis") {
    CHECK(axis_count({0.0, 1.0}, 0.1) == 11);
    CHECK(axis_count({0.0, 0.05}, 0.1) == 1);
    CHECK(axis_count({0.2, 0.2}, 0.1) == 1);
    const auto axis = grid_axis({0.64, 0.68}, 0.01);
    REQUIRE(axis.size() == 5);
    CHECK(axis.front() == 0.64);
    CHECK(axis.back() == doctest::Approx(0.68));
}

TEST_CASE("pruned, unpruned and serial reference searches agree") {
    for (const Stage& st : {near_optimum_stage(), six_per_axis_stage()}) {
        const SearchResult pruned = grid_search(st);
        const SearchResult area_only = grid_search(st, nullptr, {.bound_prune = false});
        const SearchResult unpruned = grid_search(st, nullptr, kNoPrune);
        const SearchResult ref = reference::grid_search(st);
        CHECK(pruned.best == ref.best);
        CHECK(pruned.area == ref.area);
        CHECK(area_only.best == ref.best);
        CHECK(unpruned.best == ref.best);
        CHECK(unpruned.area == ref.area);
        CHECK(unpruned.pruned == 0);
        CHECK(pruned.pruned > 0);
        CHECK(pruned.evaluations >= 1);
        CHECK(ref.pruned == 0);
    }
}

TEST_CASE("search results are reproducible by recomputing mu") {
    const SearchResult r = grid_search(near_optimum_stage());
    CHECK(r.area == mu(r.best));
    CHECK(in_K2(r.best));
    CHECK(near_optimum_stage().box.contains(r.best));
}

TEST_CASE("results do not depend on the thread count") {
    const int saved = omp_get_max_threads();
    const Stage st = near_optimum_stage();
    omp_set_num_threads(1);
    const SearchResult one = grid_search(st);
    SurfaceGrid s1({0.72, 0.76}, {0.11, 0.15}, 4, 3);
    const SearchResult one_s = grid_search(st, &s1);
    omp_set_num_threads(4);
    const SearchResult four = grid_search(st);
    SurfaceGrid s4({0.72, 0.76}, {0.11, 0.15}, 4, 3);
    const SearchResult four_s = grid_search(st, &s4);
    omp_set_num_threads(saved);
    CHECK(one == four);
    CHECK(one_s == four_s);
    CHECK(s1 == s4);
}

TEST_CASE("one-point stage evaluates the single node") {
    const Config c{0.6625, 0.1895, 1.30829, 0.7415, 0.1305, 1.63299};
    const DomainBox box{{c.x1, c.x1}, {c.y1, c.y1}, {c.alpha, c.alpha}, {c.x2, c.x2}, {c.y2, c.y2}, {c.beta, c.beta}};
    const SearchResult r = grid_search({box, 0.01, 0.01});
    CHECK(r.best == c);
    CHECK(r.area == mu(c));
    CHECK(r.area == doctest::Approx(0.2286434614326672).epsilon(1e-12));
}

TEST_CASE("desk-scale stage over the refined (x2, y2) region") {
    const DomainBox box{{0.6, 0.72}, {0.14, 0.235}, kK1Alpha, {0.7, 0.77}, {0.1, 0.17}, kK1Beta};
    const SearchResult r = grid_search({box, 0.005, 0.005});
    CHECK(r.area <= 0.2290);
    CHECK(r.area >= 0.227498);
    CHECK(r.area == mu(r.best));
}

TEST_CASE("the coarse minimum is within the error bound of a finer rerun") {
    Stage coarse = near_optimum_stage();
    coarse.d1 = 0.02;
    coarse.d2 = 0.025;
    Stage fine = coarse;
    fine.d1 = 0.005;
    fine.d2 = 0.005;
    const double c = grid_search(coarse).area;
    const double f = grid_search(fine).area;
    CHECK(f <= c);
    CHECK(c - f <= grid_error_bound(coarse.d1, coarse.d2).exact_bound);
}

TEST_CASE("stage validation") {
    Stage st = near_optimum_stage();
    st.d1 = 0.0;
    CHECK_THROWS_AS(grid_search(st), InvalidPlan);
    st = near_optimum_stage();
    st.d2 = -0.1;
    CHECK_THROWS_AS(grid_search(st), InvalidPlan);
    st = near_optimum_stage();
    st.box.x1 = {0.7, 0.6};
    CHECK_THROWS_AS(grid_search(st), InvalidPlan);
    st = near_optimum_stage();
    st.box.y1 = {0.2, 0.3};
    CHECK_THROWS_AS(grid_search(st), InvalidPlan);
    CHECK_NOTHROW(grid_search(st, nullptr, {.enforce_domain = false}));
    // Every node fails K2: the square floats far above the segment.
    const Stage high{{{0.5, 0.5}, {0.3, 0.3}, {0.0, 0.0}, {0.5, 0.5}, {0.0, 0.0}, {1.5, 1.5}}, 0.1, 0.1};
    CHECK_THROWS_AS(grid_search(high, nullptr, {.enforce_domain = false}), InvalidPlan);
}

TEST_CASE("run_plan with a single stage equals grid_search") {
    const Stage st = near_optimum_stage();
    const SearchResult a = run_plan({{{st.box, st.d1, st.d2}}});
    const SearchResult b = grid_search(st);
    CHECK(a.best == b.best);
    CHECK(a.area == b.area);
    CHECK(a.stage_index == 0);
}

TEST_CASE("auto stages zoom around the previous best and never increase the area") {
    const DomainBox box{{0.65, 0.675}, {0.175, 0.2}, {1.29, 1.33}, {0.73, 0.755}, {0.12, 0.145}, {1.62, 1.65}};
    SearchPlan plan{{{box, 0.005, 0.005}}};
    const SearchResult first = run_plan(plan);
    plan.stages.push_back({std::nullopt, 0.001, 0.001});
    const SearchResult second = run_plan(plan);
    CHECK(second.area <= first.area);
    CHECK(second.area <= 0.22764);
    CHECK(second.area >= 0.227498);
    CHECK(second.area == mu(second.best));
    CHECK(second.stage_index == 1);
    CHECK(auto_box(first.best, 0.005, 0.005).contains(second.best));
}

TEST_CASE("auto_box is centered and clamped") {
    const Config c{0.66, 0.19, 1.3, 0.74, 0.13, 1.63};
    const DomainBox b = auto_box(c, 0.01, 0.02);
    CHECK(b.x1.lo == doctest::Approx(0.64));
    CHECK(b.x1.hi == doctest::Approx(0.68));
    CHECK(b.alpha.lo == doctest::Approx(1.26));
    CHECK(b.beta.hi == doctest::Approx(1.67));
    const DomainBox edge = auto_box({0.66, 0.23, 1.3, 0.74, 0.13, 1.63}, 0.01, 0.01);
    CHECK(edge.y1.hi == search_domain().y1.hi);
    CHECK(search_domain().contains(edge));
}

TEST_CASE("plan validation") {
    CHECK_THROWS_AS(validate_plan({}), InvalidPlan);
    CHECK_THROWS_AS(validate_plan({{{std::nullopt, 0.01, 0.01}}}), InvalidPlan);
    const Stage st = near_optimum_stage();
    CHECK_NOTHROW(validate_plan({{{st.box, 0.01, 0.01}, {std::nullopt, 0.001, 0.001}}}));
    CHECK_THROWS_AS(validate_plan({{{st.box, 0.01, 0.01}, {std::nullopt, 0.0, 0.001}}}), InvalidPlan);
    DomainBox outside = st.box;
    outside.x2 = {0.72, 1.5};
    CHECK_THROWS_AS(validate_plan({{{outside, 0.01, 0.01}}}), InvalidPlan);
}

TEST_CASE("surface cells hold the minimum over their nodes") {
    const Stage st = near_optimum_stage();
    SurfaceGrid surface({0.72, 0.76}, {0.11, 0.15}, 4, 3);
    const SearchResult r = grid_search(st, &surface);
    SurfaceGrid ref_surface({0.72, 0.76}, {0.11, 0.15}, 4, 3);
    reference::grid_search(st, &ref_surface);
    CHECK(surface == ref_surface);

    const auto gm = surface.global_min();
    REQUIRE(gm.has_value());
    CHECK(gm->cell.min_area == r.area);
    CHECK(gm->cell.argmin == r.best);
    for (std::size_t j = 0; j < surface.ny(); ++j) {
        for (std::size_t i = 0; i < surface.nx(); ++i) {
            const SurfaceCell& c = surface.at(i, j);
            if (c.empty()) continue;
            CHECK(c.min_area == mu(c.argmin));
            CHECK(surface.cell_x(c.argmin.x2) == i);
            CHECK(surface.cell_y(c.argmin.y2) == j);
            CHECK(c.min_area >= 0.227498);
        }
    }
}

TEST_CASE("surface_min agrees with grid_search") {
    const Stage st = near_optimum_stage();
    const SurfaceGrid s = surface_min(st.box, 5, 5, st.d1, st.d2);
    const auto gm = s.global_min();
    REQUIRE(gm.has_value());
    const SearchResult r = grid_search(st);
    CHECK(gm->cell.min_area == r.area);
    CHECK(gm->cell.argmin == r.best);
    CHECK_THROWS_AS(surface_min(st.box, 0, 5, st.d1, st.d2), InvalidInput);
}

TEST_CASE("surface has 180 degree rotational symmetry about (0.5, 0)") {
    // Boxes symmetric under (x, y) -> (1 - x, -y); beta covers a full period
    // with an even node count so beta -> beta + pi/3 permutes the nodes.
    const double d2 = (2 * kPi / 3) / 12;
    const Stage st{{{0.4, 0.6}, {-0.1, 0.1}, {0.0, kPi / 2 - d2}, {0.3, 0.7}, {-0.1, 0.1}, {0.0, 2 * kPi / 3 - d2}},
                   0.05, d2};
    // One cell per (x2, y2) node, with nodes at the cell centers.
    SurfaceGrid s({0.275, 0.725}, {-0.125, 0.125}, 9, 5);
    grid_search(st, &s, {.enforce_domain = false});
    int compared = 0;
    for (std::size_t j = 0; j < s.ny(); ++j) {
        for (std::size_t i = 0; i < s.nx(); ++i) {
            const SurfaceCell& a = s.at(i, j);
            const SurfaceCell& b = s.at(s.nx() - 1 - i, s.ny() - 1 - j);
            CHECK(a.empty() == b.empty());
            if (a.empty()) continue;
            CHECK(std::abs(a.min_area - b.min_area) <= 1e-9);
            CHECK(a.min_area >= 0.227498);
            ++compared;
        }
    }
    CHECK(compared > 20);
}

TEST_CASE("better_candidate breaks ties lexicographically") {
    const Config a{0.1, 0, 0, 0, 0, 0};
    const Config b{0.2, 0, 0, 0, 0, 0};
    CHECK(better_candidate(0.2, b, 0.3, a));
    CHECK(better_candidate(0.3, a, 0.3, b));
    CHECK_FALSE(better_candidate(0.3, b, 0.3, a));
    CHECK_FALSE(better_candidate(0.3, a, 0.3, a));
}
