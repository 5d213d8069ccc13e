#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ccomp/errors.hpp"
#include "ccomp/linalg.hpp"
#include "ccomp/rng.hpp"
#include "ccomp/structure.hpp"

using namespace ccomp;

namespace {

std::vector<Point> pts97(std::initializer_list<std::initializer_list<u64>> raw) {
    std::vector<Point> out;
    for (auto& row : raw) {
        Point x;
        for (u64 v : row) x.push_back(FieldElem(v, 97));
        out.push_back(std::move(x));
    }
    return out;
}

// Rank oracle for minimality: the dependency's points are dependent, and
// dropping any single one leaves an independent set.
void check_minimal(const std::vector<Point>& points, const Dependency& dep, DepMode mode) {
    REQUIRE(verify_dependency(points, dep, mode));
    std::vector<std::vector<FieldElem>> rows;
    for (std::size_t idx : dep.indices)
        rows.push_back(mode == DepMode::affine ? lift_affine(points[idx]) : points[idx]);
    CHECK(gf_rank(rows) == rows.size() - 1);
    for (std::size_t drop = 0; drop < rows.size(); ++drop) {
        std::vector<std::vector<FieldElem>> rest;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != drop) rest.push_back(rows[i]);
        CHECK(gf_rank(rest) == rest.size());
    }
}

}  // namespace

TEST_CASE("minimal dependency on three plane points") {
    auto points = pts97({{0, 1}, {2, 0}, {2, 1}});
    auto dep = find_minimal_dependency(points, DepMode::homogeneous);
    REQUIRE(dep.has_value());
    CHECK(dep->indices == std::vector<std::size_t>{0, 1, 2});
    REQUIRE(dep->coeffs.size() == 2);
    CHECK(dep->coeffs[0] == FieldElem(1, 97));
    CHECK(dep->coeffs[1] == FieldElem(1, 97));
    check_minimal(points, *dep, DepMode::homogeneous);
}

TEST_CASE("independent points have no dependency") {
    auto points = pts97({{1, 0}, {0, 1}});
    CHECK_FALSE(find_minimal_dependency(points, DepMode::homogeneous).has_value());
}

TEST_CASE("scalar multiple gives a size-2 dependency") {
    auto points = pts97({{3, 5}, {6, 10}});
    auto dep = find_minimal_dependency(points, DepMode::homogeneous);
    REQUIRE(dep.has_value());
    CHECK(dep->indices.size() == 2);
    CHECK(dep->coeffs[0] == FieldElem(2, 97));
    check_minimal(points, *dep, DepMode::homogeneous);
}

TEST_CASE("zero vector rejected in homogeneous mode") {
    auto points = pts97({{1, 1}, {0, 0}});
    CHECK_THROWS_AS(find_minimal_dependency(points, DepMode::homogeneous), usage_error);
}

TEST_CASE("partition of six generic plane points") {
    PrimeField f97(97);
    SplitMix64 rng(11);
    std::vector<Point> points;
    for (int i = 0; i < 6; ++i)
        points.push_back({f97(1 + rng.below(96)), f97(1 + rng.below(96))});
    Partition part = partition_minimal_dependent(points, DepMode::homogeneous);
    REQUIRE(part.dependent_sets.size() == 2);
    CHECK(part.leftovers.empty());
    std::set<std::size_t> covered;
    for (const auto& dep : part.dependent_sets) {
        CHECK(dep.indices.size() == 3);
        check_minimal(points, dep, DepMode::homogeneous);
        covered.insert(dep.indices.begin(), dep.indices.end());
    }
    CHECK(covered.size() == 6);
}

TEST_CASE("partition of independent points is all leftovers") {
    auto points = pts97({{1, 0}, {0, 1}});
    Partition part = partition_minimal_dependent(points, DepMode::homogeneous);
    CHECK(part.dependent_sets.empty());
    CHECK(part.leftovers == std::vector<std::size_t>{0, 1});
}

TEST_CASE("affine partition groups four generic points") {
    PrimeField f97(97);
    SplitMix64 rng(23);
    std::vector<Point> points;
    for (int i = 0; i < 4; ++i)
        points.push_back({f97(1 + rng.below(96)), f97(1 + rng.below(96))});
    Partition part = partition_minimal_dependent(points, DepMode::affine);
    REQUIRE(part.dependent_sets.size() == 1);
    CHECK(part.dependent_sets[0].indices.size() == 4);
    CHECK(part.leftovers.empty());
    check_minimal(points, part.dependent_sets[0], DepMode::affine);
    // the lifted 4x3 matrix has rank 3
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& x : points) rows.push_back(lift_affine(x));
    CHECK(gf_rank(rows) == 3);
}

TEST_CASE("partition size bounds") {
    PrimeField f97(97);
    SplitMix64 rng(37);
    for (int it = 0; it < 20; ++it) {
        std::size_t m = 2 + rng.below(3);
        std::size_t k = 1 + rng.below(9);
        std::vector<Point> points;
        std::set<std::vector<u64>> seen;
        while (points.size() < k) {
            Point x;
            for (std::size_t c = 0; c < m; ++c) x.push_back(f97(1 + rng.below(96)));
            std::vector<u64> key;
            for (auto& v : x) key.push_back(v.value());
            if (seen.insert(key).second) points.push_back(x);
        }
        for (DepMode mode : {DepMode::homogeneous, DepMode::affine}) {
            Partition part = partition_minimal_dependent(points, mode);
            std::size_t ambient = mode == DepMode::affine ? m + 1 : m;
            CHECK(part.leftovers.size() <= ambient);
            std::set<std::size_t> covered(part.leftovers.begin(), part.leftovers.end());
            for (const auto& dep : part.dependent_sets) {
                CHECK(dep.indices.size() <= ambient + 1);
                check_minimal(points, dep, mode);
                for (std::size_t idx : dep.indices) CHECK(covered.insert(idx).second);
            }
            CHECK(covered.size() == k);
        }
    }
}

TEST_CASE("sparse dependency finds an antipodal pair") {
    auto points = pts97({{5, 11}, {1, 2}, {92, 86}});  // points[2] = -points[0]
    auto result = find_sparse_dependency(points, 2);
    REQUIRE(result.dependency.has_value());
    CHECK(result.dependency->indices.size() == 2);
    CHECK(result.dependency->indices == std::vector<std::size_t>{0, 2});
    check_minimal(points, *result.dependency, DepMode::homogeneous);
}

TEST_CASE("sparse dependency guaranteed above the counting threshold") {
    // 13 distinct nonzero vectors in GF(3)^4 with e=2: threshold 2e q^{m/e-1} = 12.
    PrimeField f3(3);
    for (u64 seed = 0; seed < 100; ++seed) {
        SplitMix64 rng(seed * 7919 + 1);
        std::set<std::vector<u64>> seen;
        std::vector<Point> points;
        while (points.size() < 13) {
            Point x;
            for (int c = 0; c < 4; ++c) x.push_back(f3(rng.below(3)));
            if (point_is_zero(x)) continue;
            std::vector<u64> key;
            for (auto& v : x) key.push_back(v.value());
            if (seen.insert(key).second) points.push_back(x);
        }
        auto result = find_sparse_dependency(points, 2);
        REQUIRE(result.dependency.has_value());
        CHECK(result.dependency->indices.size() <= 4);
        check_minimal(points, *result.dependency, DepMode::homogeneous);
    }
}

TEST_CASE("sparse dependency on independent points is not found") {
    auto points = pts97({{1, 0}, {0, 1}});
    auto result = find_sparse_dependency(points, 2);
    CHECK_FALSE(result.dependency.has_value());
    CHECK_FALSE(result.budget_exceeded);
}

TEST_CASE("collinear triple detected") {
    PrimeField f7(7);
    std::vector<Point> points{{f7(0), f7(0)}, {f7(1), f7(1)}, {f7(2), f7(2)}};
    auto found = find_intersecting_lines(points);
    REQUIRE(found.has_value());
    REQUIRE(std::holds_alternative<Collinear>(*found));
    const auto& col = std::get<Collinear>(*found);
    CHECK(col.indices == std::array<std::size_t, 3>{0, 1, 2});
    for (std::size_t t = 0; t < 3; ++t)
        CHECK(points_equal(col.line.eval(col.anchors[t]), points[col.indices[t]]));
}

TEST_CASE("crossing pair detected on the two-line configuration") {
    auto points = pts97({{0, 0}, {0, 1}, {2, 0}, {2, 1}});
    auto found = find_intersecting_lines(points);
    REQUIRE(found.has_value());
    REQUIRE(std::holds_alternative<Crossing>(*found));
    const auto& cross = std::get<Crossing>(*found);
    // the two non-parallel lines through disjoint pairs meet at (1, inv(2))
    Point meet = cross.line1.eval(cross.z1);
    CHECK(points_equal(meet, cross.line2.eval(cross.z2)));
    CHECK(meet == Point{FieldElem(1, 97), FieldElem(49, 97)});
    std::set<std::size_t> idx(cross.indices.begin(), cross.indices.end());
    CHECK(idx == std::set<std::size_t>{0, 1, 2, 3});
    for (std::size_t t = 0; t < 4; ++t) {
        const Curve& line = t < 2 ? cross.line1 : cross.line2;
        CHECK(points_equal(line.eval(cross.anchors[t]), points[cross.indices[t]]));
        CHECK_FALSE(points_equal(meet, points[cross.indices[t]]));
    }
}

TEST_CASE("two points give no line structure") {
    auto points = pts97({{0, 0}, {1, 5}});
    CHECK_FALSE(find_intersecting_lines(points).has_value());
}

TEST_CASE("line structure guaranteed above the counting threshold") {
    // 41 distinct points in GF(5)^3: threshold 8 q^{(m-1)/2} = 40.
    PrimeField f5(5);
    for (u64 seed = 0; seed < 50; ++seed) {
        SplitMix64 rng(seed * 104729 + 3);
        std::set<std::vector<u64>> seen;
        std::vector<Point> points;
        while (points.size() < 41) {
            Point x{f5(rng.below(5)), f5(rng.below(5)), f5(rng.below(5))};
            std::vector<u64> key{x[0].value(), x[1].value(), x[2].value()};
            if (seen.insert(key).second) points.push_back(x);
        }
        auto found = find_intersecting_lines(points);
        REQUIRE(found.has_value());
        if (std::holds_alternative<Collinear>(*found)) {
            const auto& col = std::get<Collinear>(*found);
            for (std::size_t t = 0; t < 3; ++t)
                CHECK(points_equal(col.line.eval(col.anchors[t]), points[col.indices[t]]));
        } else {
            const auto& cross = std::get<Crossing>(*found);
            CHECK(points_equal(cross.line1.eval(cross.z1), cross.line2.eval(cross.z2)));
        }
    }
}
