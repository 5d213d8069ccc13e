#include "ccomp/scenario.hpp"

#include <algorithm>
#include <set>

#include "ccomp/errors.hpp"
#include "ccomp/linalg.hpp"
#include "ccomp/structure.hpp"

namespace ccomp {

namespace {

std::vector<u64> key_of(const Point& p) {
    std::vector<u64> k;
    for (const auto& c : p) k.push_back(c.value());
    return k;
}

Point random_point(const PrimeField& field, std::size_t m, SplitMix64& rng) {
    Point x;
    x.reserve(m);
    for (std::size_t i = 0; i < m; ++i) x.push_back(field.elem(rng.below(field.modulus())));
    return x;
}

Point random_nonzero_point(const PrimeField& field, std::size_t m, SplitMix64& rng) {
    while (true) {
        Point x = random_point(field, m, rng);
        if (!point_is_zero(x)) return x;
    }
}

}  // namespace

std::vector<Point> generate_generic(const PrimeField& field, std::size_t k, std::size_t m,
                                    SplitMix64& rng) {
    std::set<std::vector<u64>> seen;
    std::vector<Point> out;
    while (out.size() < k) {
        Point x = random_nonzero_point(field, m, rng);
        if (seen.insert(key_of(x)).second) out.push_back(std::move(x));
    }
    return out;
}

std::vector<Point> generate_dependent(const PrimeField& field, std::size_t k, std::size_t m,
                                      DepMode mode, SplitMix64& rng) {
    if (k < 2) throw usage_error("dependent generator needs k >= 2");
    const std::size_t ambient = mode == DepMode::affine ? m + 1 : m;
    if (k - 1 > ambient)
        throw usage_error("no minimal dependent set of size " + std::to_string(k) + " fits in " +
                          std::to_string(ambient) + " dimensions");
    while (true) {
        std::vector<Point> pts = generate_generic(field, k - 1, m, rng);
        std::vector<std::vector<FieldElem>> rows;
        for (const auto& x : pts) rows.push_back(mode == DepMode::affine ? lift_affine(x) : x);
        if (gf_rank(rows) != k - 1) continue;

        std::vector<FieldElem> alphas;
        if (mode == DepMode::affine) {
            // Affine combinations must keep the lifted first coordinate one.
            FieldElem sum = field.zero();
            bool ok = true;
            for (std::size_t i = 0; i + 2 < k; ++i) {
                FieldElem a = field.elem(1 + rng.below(field.modulus() - 1));
                alphas.push_back(a);
                sum += a;
            }
            FieldElem last = field.one() - sum;
            if (last.is_zero()) ok = false;
            alphas.push_back(last);
            if (!ok) continue;
        } else {
            for (std::size_t i = 0; i + 1 < k; ++i)
                alphas.push_back(field.elem(1 + rng.below(field.modulus() - 1)));
        }
        Point target(m, field.zero());
        for (std::size_t i = 0; i + 1 < k; ++i)
            for (std::size_t c = 0; c < m; ++c) target[c] += alphas[i] * pts[i][c];
        if (point_is_zero(target)) continue;
        bool duplicate = false;
        for (const auto& x : pts) duplicate = duplicate || points_equal(x, target);
        if (duplicate) continue;
        pts.push_back(std::move(target));
        return pts;
    }
}

std::vector<Point> generate_collinear(const PrimeField& field, std::size_t k, std::size_t m,
                                      SplitMix64& rng) {
    if (field.modulus() < k) throw field_too_small_error(k, field.modulus());
    Point base = random_point(field, m, rng);
    Point dir = random_nonzero_point(field, m, rng);
    std::set<u64> params;
    while (params.size() < k) params.insert(rng.below(field.modulus()));
    std::vector<Point> out;
    for (u64 t : params) {
        Point x = base;
        FieldElem z = field.elem(t);
        for (std::size_t c = 0; c < m; ++c) x[c] += z * dir[c];
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Point> generate_crossing(const PrimeField& field, std::size_t m, SplitMix64& rng) {
    if (m < 2) throw usage_error("crossing generator needs at least 2 dimensions");
    while (true) {
        Point meet = random_point(field, m, rng);
        Point d1 = random_nonzero_point(field, m, rng);
        Point d2 = random_nonzero_point(field, m, rng);
        std::vector<Point> pts;
        for (const Point& dir : {d1, d2}) {
            std::set<u64> params;
            while (params.size() < 2) params.insert(1 + rng.below(field.modulus() - 1));
            for (u64 t : params) {
                Point x = meet;
                FieldElem z = field.elem(t);
                for (std::size_t c = 0; c < m; ++c) x[c] += z * dir[c];
                pts.push_back(std::move(x));
            }
        }
        std::set<std::vector<u64>> uniq;
        for (const auto& x : pts) uniq.insert(key_of(x));
        if (uniq.size() != 4) continue;
        auto found = find_intersecting_lines(pts);
        if (found && std::holds_alternative<Crossing>(*found)) return pts;
    }
}

Scenario scenario_from_json(const json& j) {
    Scenario sc;
    try {
        if (!j.is_object()) throw usage_error("scenario must be a JSON object");
        sc.modulus = j.at("modulus").get<u64>();
        sc.function = j.at("function");
        sc.inputs = j.at("inputs");
        sc.s = j.value("s", 0);
        sc.b = j.value("b", 0);
        sc.scheme = j.value("scheme", std::string("auto"));
        sc.seed = j.value("seed", 0);
        sc.adversary.seed = sc.seed;
        sc.adversary.s_budget = sc.s;
        sc.adversary.b_budget = sc.b;
        if (j.contains("adversary")) {
            const json& a = j.at("adversary");
            std::string mode = a.value("mode", std::string("exhaustive"));
            if (mode == "exhaustive")
                sc.adversary.mode = AdversaryMode::exhaustive;
            else if (mode == "random")
                sc.adversary.mode = AdversaryMode::seeded_random;
            else
                throw usage_error("unknown adversary mode '" + mode + "'");
            sc.adversary.s_budget = a.value("s_budget", sc.adversary.s_budget);
            sc.adversary.b_budget = a.value("b_budget", sc.adversary.b_budget);
            sc.adversary.corruption_variants =
                a.value("corruption_variants", sc.adversary.corruption_variants);
            sc.adversary.random_patterns = a.value("random_patterns", sc.adversary.random_patterns);
            sc.adversary.exhaustive_limit =
                a.value("exhaustive_limit", sc.adversary.exhaustive_limit);
        }
    } catch (const json::exception& ex) {
        throw usage_error(std::string("scenario schema: ") + ex.what());
    }
    return sc;
}

MultiPoly scenario_function(const Scenario& sc) {
    const PrimeField field(sc.modulus);
    try {
        if (sc.function.contains("generator")) {
            const std::string kind = sc.function.at("generator").get<std::string>();
            if (kind != "random") throw usage_error("unknown function generator '" + kind + "'");
            std::size_t m = sc.function.at("m").get<std::size_t>();
            std::size_t u = sc.function.value("u", 1);
            u32 degree = sc.function.at("degree").get<u32>();
            std::size_t terms = sc.function.value("terms", 3);
            bool homogeneous = sc.function.value("homogeneous", false);
            SplitMix64 rng(sc.function.value("seed", sc.seed));
            return MultiPoly::random(field, m, u, degree, terms, homogeneous, rng);
        }
        std::size_t m = sc.function.at("m").get<std::size_t>();
        std::vector<std::vector<Term>> components;
        for (const auto& comp : sc.function.at("components")) {
            std::vector<Term> terms;
            for (const auto& term : comp) {
                Term t;
                t.exps = term.at("exps").get<std::vector<u32>>();
                t.coeff = field.from_int(term.at("coeff").get<i64>());
                terms.push_back(std::move(t));
            }
            components.push_back(std::move(terms));
        }
        return MultiPoly::from_components(field, m, std::move(components));
    } catch (const json::exception& ex) {
        throw usage_error(std::string("function schema: ") + ex.what());
    }
}

std::vector<Point> scenario_inputs(const Scenario& sc, const MultiPoly& f) {
    const PrimeField field(sc.modulus);
    const std::size_t m = f.arity();
    try {
        if (sc.inputs.contains("points")) {
            std::vector<Point> out;
            for (const auto& pt : sc.inputs.at("points")) {
                Point x;
                for (const auto& v : pt) x.push_back(field.from_int(v.get<i64>()));
                out.push_back(std::move(x));
            }
            return out;
        }
        const std::string kind = sc.inputs.at("generator").get<std::string>();
        SplitMix64 rng(sc.inputs.value("seed", sc.seed));
        std::size_t k = sc.inputs.value("k", 4);
        if (kind == "generic") return generate_generic(field, k, m, rng);
        if (kind == "collinear") return generate_collinear(field, k, m, rng);
        if (kind == "crossing") return generate_crossing(field, m, rng);
        if (kind == "dependent") {
            std::string mode = sc.inputs.value(
                "mode", sc.scheme == "homogeneous" ? std::string("homogeneous")
                                                   : std::string("affine"));
            if (mode != "homogeneous" && mode != "affine")
                throw usage_error("dependent generator mode must be homogeneous or affine");
            return generate_dependent(
                field, k, m, mode == "homogeneous" ? DepMode::homogeneous : DepMode::affine, rng);
        }
        throw usage_error("unknown input generator '" + kind + "'");
    } catch (const json::exception& ex) {
        throw usage_error(std::string("inputs schema: ") + ex.what());
    }
}

namespace {

// A line through all points when collinear (anchored by the line parameter),
// otherwise the generic degree <= k-1 fit at anchors 0..k-1.
std::pair<Curve, std::vector<FieldElem>> fit_curve_through(const PrimeField& field,
                                                           const std::vector<Point>& pts) {
    const std::size_t k = pts.size();
    if (k >= 2) {
        std::size_t probe = 1;
        while (probe < k && points_equal(pts[probe], pts[0])) ++probe;
        if (probe < k) {
            Point dir;
            std::size_t pivot = 0;
            for (std::size_t c = 0; c < pts[0].size(); ++c)
                dir.push_back(pts[probe][c] - pts[0][c]);
            while (dir[pivot].is_zero()) ++pivot;
            FieldElem inv = dir[pivot].inv();
            for (auto& c : dir) c *= inv;
            Point base = pts[0];
            FieldElem t0 = pts[0][pivot];
            for (std::size_t c = 0; c < base.size(); ++c) base[c] -= t0 * dir[c];
            Curve line(pts[0].size(), field.modulus(), {base, dir});
            bool all_on = true;
            std::vector<FieldElem> anchors;
            for (const auto& x : pts) {
                anchors.push_back(x[pivot]);
                all_on = all_on && points_equal(line.eval(x[pivot]), x);
            }
            if (all_on) return {line, anchors};
        }
    }
    auto anchors = field.enumerate(k);
    std::vector<Sample> through;
    for (std::size_t i = 0; i < k; ++i) through.push_back(Sample{anchors[i], pts[i]});
    return {interpolate(through, k - 1), anchors};
}

}  // namespace

QueryPlan scenario_plan(const Scenario& sc, const MultiPoly& f, const std::vector<Point>& inputs) {
    const PrimeField field(sc.modulus);
    const std::string& scheme = sc.scheme;
    if (scheme == "auto" || scheme == "composite") return plan_composite(f, inputs, sc.s, sc.b);
    if (scheme == "replication")
        return plan_replication(field, inputs, sc.s, sc.b, f.total_degree());
    if (scheme == "lcc") return plan_lcc(f, inputs, sc.s, sc.b);
    if (scheme == "curve_direct") {
        auto [curve, anchors] = fit_curve_through(field, inputs);
        return plan_curve_direct(f, inputs, sc.s, sc.b, curve, anchors);
    }
    if (scheme == "homogeneous" || scheme == "nonhomogeneous") {
        DepMode mode = scheme == "homogeneous" ? DepMode::homogeneous : DepMode::affine;
        auto dep = find_minimal_dependency(inputs, mode);
        if (!dep || dep->indices.size() != inputs.size())
            throw usage_error("input points are not one minimal dependent set; use scheme=auto "
                              "to partition them");
        return mode == DepMode::homogeneous ? plan_homogeneous(f, inputs, *dep, sc.s, sc.b)
                                            : plan_nonhomogeneous(f, inputs, *dep, sc.s, sc.b);
    }
    if (scheme == "intersecting") {
        if (inputs.size() != 4)
            throw usage_error("intersecting scheme expects exactly 4 input points");
        auto found = find_intersecting_lines(inputs);
        if (!found || !std::holds_alternative<Crossing>(*found))
            throw usage_error("no pair of crossing lines through the input points");
        return plan_intersecting(f, inputs, std::get<Crossing>(*found), sc.s, sc.b);
    }
    throw usage_error("unknown scheme '" + scheme + "'");
}

}  // namespace ccomp
