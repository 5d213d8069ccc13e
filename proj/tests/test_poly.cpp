#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccomp/errors.hpp"
#include "ccomp/poly.hpp"
#include "ccomp/rng.hpp"

using namespace ccomp;

namespace {

// f(x1, x2) = x1 * x2
MultiPoly product_poly(const PrimeField& f) {
    return MultiPoly::from_components(f, 2, {{Term{{1, 1}, f.one()}}});
}

// A degree-2 plane curve through (0,0), (2,1), (4,0):
// p(z) = (z, 1 - inv(4) (z-2)^2) over GF(97), inv(4) = 73.
Curve plane_arc(const PrimeField& f) {
    // second coordinate: 1 - 73(z^2 - 4z + 4) = (1 - 73*4) + (73*4) z - 73 z^2
    FieldElem c0 = f.one() - f(73) * f(4);
    FieldElem c1 = f(73) * f(4);
    FieldElem c2 = -f(73);
    return Curve(2, 97, {{f(0), c0}, {f(1), c1}, {f(0), c2}});
}

}  // namespace

TEST_CASE("multivariate evaluation") {
    PrimeField f97(97);
    MultiPoly f = product_poly(f97);
    CHECK(f.eval({f97(2), f97(1)}) == Point{f97(2)});
    CHECK(f.eval({f97(0), f97(5)}) == Point{f97(0)});
    CHECK_THROWS_AS(f.eval({f97(1)}), usage_error);

    Curve p = plane_arc(f97);
    CHECK(f.eval(p.eval(f97(2))) == Point{f97(2)});  // p(2) = (2, 1)
}

TEST_CASE("curve evaluation") {
    PrimeField f97(97);
    // line (z, 1 - z/2)
    Curve line(2, 97, {{f97(0), f97(1)}, {f97(1), -f97(2).inv()}});
    CHECK(line.eval(f97(0)) == Point{f97(0), f97(1)});

    Curve c = Curve::constant({f97(5), f97(6)});
    CHECK(c.degree() == 0);
    CHECK(c.eval(f97(42)) == Point{f97(5), f97(6)});

    Curve arc = plane_arc(f97);
    CHECK(arc.eval(f97(4)) == Point{f97(4), f97(0)});
    CHECK(arc.eval(f97(0)) == Point{f97(0), f97(0)});
}

TEST_CASE("interpolation through two points is the line") {
    PrimeField f97(97);
    std::vector<Sample> samples{{f97(0), {f97(1), f97(5)}}, {f97(1), {f97(2), f97(3)}}};
    Curve line = interpolate(samples, 1);
    CHECK(line.eval(f97(0)) == samples[0].y);
    CHECK(line.eval(f97(1)) == samples[1].y);
}

TEST_CASE("five of six samples recover the composed curve") {
    PrimeField f97(97);
    MultiPoly f = product_poly(f97);
    Curve p = plane_arc(f97);
    // h(z) = f(p(z)) has degree 4; any 5 distinct queries determine it.
    std::vector<Sample> samples;
    for (u64 z : {3, 5, 6, 7, 8}) samples.push_back({f97(z), f.eval(p.eval(f97(z)))});
    Curve h = interpolate(samples, 4);
    CHECK(h.eval(f97(0)) == f.eval(p.eval(f97(0))));  // h(0) recovers f at the first point
    CHECK(h.eval(f97(2)) == Point{f97(2)});           // f((2,1)) = 2
    CHECK(h.eval(f97(4)) == Point{f97(0)});           // f((4,0)) = 0
}

TEST_CASE("interpolation validates its input") {
    PrimeField f7(7);
    std::vector<Sample> dup{{f7(1), {f7(1)}}, {f7(1), {f7(2)}}};
    CHECK_THROWS_AS(interpolate(dup, 1), usage_error);

    // A cubic sampled 4 times cannot pass a degree-2 consistency check.
    std::vector<Sample> cubic;
    PrimeField f97(97);
    for (u64 z : {0, 1, 2, 3}) cubic.push_back({f97(z), {f97(z).pow(3)}});
    CHECK_THROWS_AS(interpolate(cubic, 2), inconsistent_samples_error);
    CHECK_NOTHROW(interpolate(cubic, 3));
}

TEST_CASE("interpolation round-trip on random curves") {
    SplitMix64 rng(2024);
    PrimeField f97(97);
    for (int it = 0; it < 1000; ++it) {
        std::size_t degree = rng.below(9);
        std::size_t dim = 1 + rng.below(3);
        std::vector<Point> coeffs;
        for (std::size_t t = 0; t <= degree; ++t) {
            Point c;
            for (std::size_t j = 0; j < dim; ++j) c.push_back(f97(rng.below(97)));
            coeffs.push_back(c);
        }
        Curve curve(dim, 97, coeffs);
        std::vector<Sample> samples;
        for (std::size_t i = 0; i <= degree; ++i) {
            FieldElem z = f97(i * 3 + 1);
            samples.push_back({z, curve.eval(z)});
        }
        Curve back = interpolate(samples, degree);
        CHECK(back == curve);
    }
}

TEST_CASE("berlekamp-welch with b=0 matches plain interpolation") {
    PrimeField f97(97);
    Curve quad(1, 97, {{f97(3)}, {f97(5)}, {f97(7)}});
    std::vector<Sample> samples;
    for (u64 z : {0, 1, 2, 3, 4}) samples.push_back({f97(z), quad.eval(f97(z))});
    CHECK(berlekamp_welch(samples, 2, 0) == interpolate(samples, 2));
}

TEST_CASE("berlekamp-welch corrects one corruption in every position") {
    PrimeField f97(97);
    Curve line(1, 97, {{f97(10)}, {f97(31)}});
    std::vector<Sample> clean;
    for (u64 z : {0, 1, 2, 3}) clean.push_back({f97(z), line.eval(f97(z))});
    for (std::size_t pos = 0; pos < 4; ++pos) {
        for (u64 offset : {1, 13, 40, 77, 96}) {
            auto corrupted = clean;
            corrupted[pos].y[0] += f97(offset);
            Curve decoded = berlekamp_welch(corrupted, 1, 1);
            CHECK(decoded == line);
        }
    }
}

TEST_CASE("berlekamp-welch error contract beyond the corruption budget") {
    PrimeField f97(97);
    Curve quad(1, 97, {{f97(4)}, {f97(9)}, {f97(2)}});
    std::vector<Sample> samples;
    for (u64 z : {0, 1, 2, 3, 4}) samples.push_back({f97(z), quad.eval(f97(z))});
    samples[0].y[0] += f97(8);
    samples[3].y[0] += f97(55);
    // Two corruptions with budget one: either no solution, or the wrong curve
    // is caught by the final agreement count. Both are decoding failures.
    CHECK_THROWS_AS(berlekamp_welch(samples, 2, 1), decoding_failure_error);
    std::vector<Sample> short_list(samples.begin(), samples.begin() + 3);
    CHECK_THROWS_AS(berlekamp_welch(short_list, 2, 1), insufficient_responses_error);
}

TEST_CASE("berlekamp-welch recovers under every corruption position at minimal size") {
    PrimeField f97(97);
    SplitMix64 rng(77);
    Curve quad(1, 97, {{f97(8)}, {f97(21)}, {f97(5)}});
    const std::size_t b = 1, n = 2 + 2 * b + 1;
    std::vector<Sample> clean;
    for (u64 z = 0; z < n; ++z) clean.push_back({f97(z), quad.eval(f97(z))});
    for (std::size_t pos = 0; pos < n; ++pos) {
        auto corrupted = clean;
        corrupted[pos].y[0] += f97(1 + rng.below(96));
        CHECK(berlekamp_welch(corrupted, 2, b) == quad);
    }
}

TEST_CASE("berlekamp-welch recovers under every corruption pair at b=2") {
    PrimeField f97(97);
    SplitMix64 rng(404);
    Curve line(1, 97, {{f97(17)}, {f97(3)}});
    const std::size_t b = 2, n = 1 + 2 * b + 1;
    std::vector<Sample> clean;
    for (u64 z = 0; z < n; ++z) clean.push_back({f97(z), line.eval(f97(z))});
    for (std::size_t p1 = 0; p1 < n; ++p1) {
        for (std::size_t p2 = p1; p2 < n; ++p2) {  // p1 == p2 covers single corruptions
            auto corrupted = clean;
            corrupted[p1].y[0] += f97(1 + rng.below(96));
            if (p2 != p1) corrupted[p2].y[0] += f97(1 + rng.below(96));
            CHECK(berlekamp_welch(corrupted, 1, b) == line);
        }
    }
}

TEST_CASE("homogeneity predicate") {
    PrimeField f7(7);
    CHECK(MultiPoly::from_components(f7, 2, {{Term{{1, 1}, f7.one()}}}).is_homogeneous());
    CHECK_FALSE(MultiPoly::from_components(f7, 1, {{Term{{1}, f7.one()}, Term{{0}, f7.one()}}})
                    .is_homogeneous());
    MultiPoly zero = MultiPoly::from_components(f7, 2, {{}});
    CHECK(zero.is_homogeneous());
    CHECK(zero.total_degree() == 0);
}

TEST_CASE("homogenization") {
    PrimeField f7(7);
    // x + 1 -> x + r
    MultiPoly f = MultiPoly::from_components(f7, 1, {{Term{{1}, f7.one()}, Term{{0}, f7.one()}}});
    MultiPoly lifted = f.homogenized();
    CHECK(lifted.arity() == 2);
    CHECK(lifted.is_homogeneous());
    CHECK(lifted.eval({f7(1), f7(4)}) == f.eval({f7(4)}));
    CHECK(lifted.eval({f7(3), f7(4)}) == Point{f7(4) + f7(3)});

    // x1 x2 + x1 -> x1 x2 + x1 r
    MultiPoly g =
        MultiPoly::from_components(f7, 2, {{Term{{1, 1}, f7.one()}, Term{{1, 0}, f7.one()}}});
    MultiPoly glift = g.homogenized();
    CHECK(glift.is_homogeneous());
    CHECK(glift.total_degree() == 2);

    // already homogeneous: no dependence on the new variable
    MultiPoly h = MultiPoly::from_components(f7, 2, {{Term{{1, 1}, f7(3)}}});
    MultiPoly hlift = h.homogenized();
    for (const auto& comp : hlift.components())
        for (const auto& term : comp) CHECK(term.exps[0] == 0);
}

TEST_CASE("homogenized polynomial restricts back to the original") {
    PrimeField f97(97);
    SplitMix64 rng(5150);
    MultiPoly f = MultiPoly::random(f97, 3, 2, 3, 5, false, rng);
    MultiPoly lifted = f.homogenized();
    REQUIRE(lifted.is_homogeneous());
    for (int it = 0; it < 100; ++it) {
        Point x{f97(rng.below(97)), f97(rng.below(97)), f97(rng.below(97))};
        Point lx = x;
        lx.insert(lx.begin(), f97.one());
        CHECK(lifted.eval(lx) == f.eval(x));
    }
}

TEST_CASE("homogeneity law f(aX) = a^d f(X) over GF(7)") {
    PrimeField f7(7);
    SplitMix64 rng(31337);
    MultiPoly f = MultiPoly::random(f7, 2, 1, 3, 4, true, rng);
    REQUIRE(f.is_homogeneous());
    for (int it = 0; it < 50; ++it) {
        Point x{f7(rng.below(7)), f7(rng.below(7))};
        Point fx = f.eval(x);
        for (u64 a = 0; a < 7; ++a) {
            Point ax{f7(a) * x[0], f7(a) * x[1]};
            Point want{f7(a).pow(f.total_degree()) * fx[0]};
            CHECK(f.eval(ax) == want);
        }
    }
}

TEST_CASE("term normalization") {
    PrimeField f7(7);
    // 3x + 4x = 0 mod 7: the term disappears
    MultiPoly f = MultiPoly::from_components(f7, 1, {{Term{{1}, f7(3)}, Term{{1}, f7(4)}}});
    CHECK(f.components()[0].empty());
    CHECK(f.total_degree() == 0);
}
