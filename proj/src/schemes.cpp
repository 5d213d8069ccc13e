#include "ccomp/schemes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ccomp/errors.hpp"

namespace ccomp {

std::string scheme_name(SchemeTag tag) {
    switch (tag) {
        case SchemeTag::replication: return "replication";
        case SchemeTag::lcc: return "lcc";
        case SchemeTag::curve_direct: return "curve_direct";
        case SchemeTag::homogeneous: return "homogeneous";
        case SchemeTag::nonhomogeneous: return "nonhomogeneous";
        case SchemeTag::intersecting: return "intersecting";
        case SchemeTag::composite: return "composite";
    }
    return "?";
}

std::size_t oblivious_threshold(std::size_t k, u32 deg_f, std::size_t s, std::size_t b) {
    std::size_t unavailability = s + 2 * b + 1;
    return std::min(k * unavailability, (k - 1) * deg_f + unavailability);
}

namespace {

void check_inputs(const MultiPoly& f, const std::vector<Point>& inputs) {
    if (inputs.empty()) throw usage_error("need at least one input point");
    for (const auto& x : inputs) {
        if (x.size() != f.arity()) throw usage_error("input point dimension != polynomial arity");
        for (const auto& c : x)
            if (c.modulus() != f.modulus()) throw usage_error("input point from wrong field");
    }
}

Point scale_point(const Point& x, const FieldElem& a) {
    Point out = x;
    for (auto& c : out) c *= a;
    return out;
}

// Lagrange-style curve through scaled dependent points:
//   p*(z) = sum_i alpha_i X_i prod_{j != i} (z - beta_j) / (beta_last - beta_j)
// so p*(beta_i) = lambda_i X_i for i < k-1 and p*(beta_{k-1}) = X_{k-1}.
struct DependentCurve {
    Curve curve;
    std::vector<FieldElem> lambdas;  // k-1 nonzero scale factors
};

DependentCurve build_dependent_curve(const std::vector<Point>& pts,
                                     const std::vector<FieldElem>& alphas,
                                     const std::vector<FieldElem>& betas) {
    const std::size_t k = pts.size();
    const std::size_t dim = pts[0].size();
    const u64 p = betas[0].modulus();
    const PrimeField field(p);
    const FieldElem beta_last = betas[k - 1];

    std::vector<Point> coeffs(std::max<std::size_t>(k - 1, 1), Point(dim, field.zero()));
    std::vector<FieldElem> lambdas;
    lambdas.reserve(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        std::vector<FieldElem> basis{field.one()};
        FieldElem denom = field.one();
        FieldElem lambda = alphas[i];
        for (std::size_t j = 0; j + 1 < k; ++j) {
            if (j == i) continue;
            basis.push_back(field.zero());
            for (std::size_t t = basis.size() - 1; t > 0; --t)
                basis[t] = basis[t - 1] - betas[j] * basis[t];
            basis[0] = -betas[j] * basis[0];
            denom *= beta_last - betas[j];
            lambda *= (betas[i] - betas[j]) * (beta_last - betas[j]).inv();
        }
        FieldElem scale = denom.inv();
        Point scaled = scale_point(pts[i], alphas[i] * scale);
        for (std::size_t t = 0; t < basis.size(); ++t)
            for (std::size_t c = 0; c < dim; ++c) coeffs[t][c] += basis[t] * scaled[c];
        lambdas.push_back(lambda);
    }
    return {Curve(dim, p, std::move(coeffs)), std::move(lambdas)};
}

std::vector<std::size_t> identity_indices(std::size_t k) {
    std::vector<std::size_t> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = i;
    return out;
}

}  // namespace

QueryPlan plan_replication(const PrimeField& field, const std::vector<Point>& inputs,
                           std::size_t s, std::size_t b, std::optional<u32> deg_f) {
    if (inputs.empty()) throw usage_error("need at least one input point");
    const std::size_t k = inputs.size();
    const std::size_t copies = s + 2 * b + 1;
    QueryPlan plan;
    plan.modulus = field.modulus();
    plan.tag = SchemeTag::replication;
    plan.s = s;
    plan.b = b;
    plan.queries.reserve(k * copies);
    for (const auto& x : inputs)
        for (std::size_t c = 0; c < copies; ++c) plan.queries.push_back(x);
    plan.output_indices = identity_indices(k);
    plan.baseline_oblivious = deg_f ? oblivious_threshold(k, *deg_f, s, b) : k * copies;
    plan.meta = ReplicationMeta{k, copies};
    return plan;
}

QueryPlan plan_lcc(const MultiPoly& f, const std::vector<Point>& inputs, std::size_t s,
                   std::size_t b) {
    check_inputs(f, inputs);
    const std::size_t k = inputs.size();
    const u32 d = f.total_degree();
    const std::size_t w_rep = k * (s + 2 * b + 1);
    const std::size_t w_curve = (k - 1) * d + s + 2 * b + 1;
    const PrimeField field(f.modulus());

    if (w_rep < w_curve) {
        QueryPlan plan = plan_replication(field, inputs, s, b, d);
        plan.tag = SchemeTag::lcc;
        return plan;
    }

    const std::size_t need = std::max<std::size_t>(k, w_curve);
    if (field.modulus() < need) throw field_too_small_error(need, field.modulus());
    auto anchors = field.enumerate(need);

    std::vector<Sample> through;
    through.reserve(k);
    for (std::size_t i = 0; i < k; ++i) through.push_back(Sample{anchors[i], inputs[i]});
    Curve curve = interpolate(through, k - 1);

    QueryPlan plan;
    plan.modulus = field.modulus();
    plan.tag = SchemeTag::lcc;
    plan.s = s;
    plan.b = b;
    plan.output_indices = identity_indices(k);
    plan.baseline_oblivious = oblivious_threshold(k, d, s, b);
    CurveMeta meta;
    meta.degree_bound = (k - 1) * d;
    meta.deg_f = d;
    for (std::size_t i = 0; i < w_curve; ++i) {
        meta.query_anchors.push_back(anchors[i]);
        plan.queries.push_back(i < k ? inputs[i] : curve.eval(anchors[i]));
        meta.response_scale.push_back(field.one());
    }
    for (std::size_t i = 0; i < k; ++i) {
        meta.output_anchors.push_back(anchors[i]);
        meta.output_unscale.push_back(field.one());
    }
    plan.meta = std::move(meta);
    return plan;
}

QueryPlan plan_curve_direct(const MultiPoly& f, const std::vector<Point>& inputs, std::size_t s,
                            std::size_t b, const Curve& curve,
                            const std::vector<FieldElem>& input_anchors) {
    check_inputs(f, inputs);
    if (input_anchors.size() != inputs.size())
        throw usage_error("one anchor per input point required");
    for (std::size_t i = 0; i < inputs.size(); ++i)
        if (!points_equal(curve.eval(input_anchors[i]), inputs[i]))
            throw usage_error("curve does not pass through input " + std::to_string(i) +
                              " at its stated anchor");

    const u32 d = f.total_degree();
    const std::size_t w = d * curve.degree() + s + 2 * b + 1;
    const PrimeField field(f.modulus());
    if (field.modulus() < w) throw field_too_small_error(w, field.modulus());
    auto anchors = field.enumerate(w);

    QueryPlan plan;
    plan.modulus = field.modulus();
    plan.tag = SchemeTag::curve_direct;
    plan.s = s;
    plan.b = b;
    plan.output_indices = identity_indices(inputs.size());
    plan.baseline_oblivious = oblivious_threshold(inputs.size(), d, s, b);
    CurveMeta meta;
    meta.degree_bound = d * curve.degree();
    meta.deg_f = d;
    for (std::size_t i = 0; i < w; ++i) {
        meta.query_anchors.push_back(anchors[i]);
        plan.queries.push_back(curve.eval(anchors[i]));
        meta.response_scale.push_back(field.one());
    }
    meta.output_anchors = input_anchors;
    meta.output_unscale.assign(inputs.size(), field.one());
    plan.meta = std::move(meta);
    return plan;
}

QueryPlan plan_homogeneous(const MultiPoly& f, const std::vector<Point>& inputs,
                           const Dependency& dep, std::size_t s, std::size_t b) {
    check_inputs(f, inputs);
    if (!f.is_homogeneous())
        throw usage_error("non-homogeneous polynomial passed to the homogeneous planner");
    if (!verify_dependency(inputs, dep, DepMode::homogeneous))
        throw usage_error("dependency does not verify over the input points");
    for (std::size_t idx : dep.indices)
        if (point_is_zero(inputs[idx]))
            throw usage_error("zero input point in homogeneous planner");

    const std::size_t k = dep.indices.size();
    const u32 d = f.total_degree();
    const std::size_t degree_bound = (k - 2) * d;
    const std::size_t w = degree_bound + s + 2 * b + 1;
    const PrimeField field(f.modulus());
    // k distinct output anchors are needed even when w < k.
    const std::size_t need = std::max(k, w);
    if (field.modulus() < need) throw field_too_small_error(need, field.modulus());
    auto anchors = field.enumerate(need);

    std::vector<Point> pts;
    pts.reserve(k);
    for (std::size_t idx : dep.indices) pts.push_back(inputs[idx]);
    std::vector<FieldElem> betas(anchors.begin(), anchors.begin() + k);
    DependentCurve dc = build_dependent_curve(pts, dep.coeffs, betas);

    QueryPlan plan;
    plan.modulus = field.modulus();
    plan.tag = SchemeTag::homogeneous;
    plan.s = s;
    plan.b = b;
    plan.output_indices = dep.indices;
    plan.baseline_oblivious = oblivious_threshold(k, d, s, b);
    CurveMeta meta;
    meta.degree_bound = degree_bound;
    meta.deg_f = d;
    meta.lambdas = dc.lambdas;
    meta.dependency = dep;
    for (std::size_t i = 0; i < w; ++i) {
        meta.query_anchors.push_back(anchors[i]);
        if (i < k) {
            plan.queries.push_back(pts[i]);  // systematic
            meta.response_scale.push_back(i + 1 < k ? dc.lambdas[i].pow(d) : field.one());
        } else {
            plan.queries.push_back(dc.curve.eval(anchors[i]));
            meta.response_scale.push_back(field.one());
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        meta.output_anchors.push_back(anchors[i]);
        meta.output_unscale.push_back(i + 1 < k ? dc.lambdas[i].pow(d).inv() : field.one());
    }
    plan.meta = std::move(meta);
    return plan;
}

QueryPlan plan_nonhomogeneous(const MultiPoly& f, const std::vector<Point>& inputs,
                              const Dependency& dep, std::size_t s, std::size_t b) {
    check_inputs(f, inputs);
    if (!verify_dependency(inputs, dep, DepMode::affine))
        throw usage_error("dependency does not verify over the lifted input points");

    const std::size_t k = dep.indices.size();
    const u32 d = f.total_degree();
    const std::size_t degree_bound = (k - 2) * d;
    const std::size_t w = degree_bound + s + 2 * b + 1;
    const PrimeField field(f.modulus());
    // Anchor skipping discards at most k-2 field elements on top of the
    // homogeneous requirement.
    const std::size_t need = std::max(k, (k - 2) * (d + 1) + s + 2 * b + 1);
    if (field.modulus() < need) throw field_too_small_error(need, field.modulus());

    std::vector<Point> lifted;
    lifted.reserve(k);
    for (std::size_t idx : dep.indices) lifted.push_back(lift_affine(inputs[idx]));
    auto betas = field.enumerate(k);
    DependentCurve dc = build_dependent_curve(lifted, dep.coeffs, betas);

    QueryPlan plan;
    plan.modulus = field.modulus();
    plan.tag = SchemeTag::nonhomogeneous;
    plan.s = s;
    plan.b = b;
    plan.output_indices = dep.indices;
    plan.baseline_oblivious = oblivious_threshold(k, d, s, b);
    CurveMeta meta;
    meta.degree_bound = degree_bound;
    meta.deg_f = d;
    meta.lambdas = dc.lambdas;
    meta.dependency = dep;

    const std::size_t systematic = std::min(k, w);
    for (std::size_t i = 0; i < systematic; ++i) {
        meta.query_anchors.push_back(betas[i]);
        plan.queries.push_back(inputs[dep.indices[i]]);
        meta.response_scale.push_back(i + 1 < k ? dc.lambdas[i].pow(d) : field.one());
        meta.r_coords.push_back(field.one());
    }
    u64 next = k;
    while (plan.queries.size() < w) {
        if (next >= field.modulus()) throw field_too_small_error(need, field.modulus());
        FieldElem z = field.elem(next++);
        Point on_curve = dc.curve.eval(z);
        FieldElem r = on_curve[0];
        if (r.is_zero()) continue;  // workers must receive a de-homogenizable point
        FieldElem r_inv = r.inv();
        Point query(on_curve.begin() + 1, on_curve.end());
        for (auto& c : query) c *= r_inv;
        plan.queries.push_back(std::move(query));
        meta.query_anchors.push_back(z);
        meta.response_scale.push_back(r.pow(d));
        meta.r_coords.push_back(r);
    }
    for (std::size_t i = 0; i < k; ++i) {
        meta.output_anchors.push_back(betas[i]);
        meta.output_unscale.push_back(i + 1 < k ? dc.lambdas[i].pow(d).inv() : field.one());
    }
    plan.meta = std::move(meta);
    return plan;
}

QueryPlan plan_intersecting(const MultiPoly& f, const std::vector<Point>& inputs,
                            const Crossing& crossing, std::size_t s, std::size_t b) {
    check_inputs(f, inputs);
    if (s < 1)
        throw usage_error("intersecting scheme needs s >= 1: with no straggler slack neither "
                          "curve can be decoded before the shared point is known");
    for (std::size_t t = 0; t < 4; ++t) {
        const Curve& line = t < 2 ? crossing.line1 : crossing.line2;
        if (crossing.indices[t] >= inputs.size() ||
            !points_equal(line.eval(crossing.anchors[t]), inputs[crossing.indices[t]]))
            throw usage_error("crossing structure does not match the input points");
    }
    Point meet = crossing.line1.eval(crossing.z1);
    if (!points_equal(meet, crossing.line2.eval(crossing.z2)))
        throw usage_error("stated intersection does not verify");
    for (std::size_t t = 0; t < 4; ++t)
        if (points_equal(meet, inputs[crossing.indices[t]]))
            throw usage_error("intersection coincides with an input point");

    const u32 d = f.total_degree();
    const std::size_t bound1 = d * crossing.line1.degree();
    const std::size_t bound2 = d * crossing.line2.degree();
    const std::size_t n1 = bound1 + s + 2 * b;
    const std::size_t n2 = bound2 + s + 2 * b;
    const PrimeField field(f.modulus());
    const std::size_t need = std::max(n1, n2) + 1;  // one anchor lost to the intersection
    if (field.modulus() < need) throw field_too_small_error(need, field.modulus());

    auto pick_anchors = [&](std::size_t count, const FieldElem& skip) {
        std::vector<FieldElem> out;
        u64 z = 0;
        while (out.size() < count) {
            FieldElem cand = field.elem(z++);
            if (cand != skip) out.push_back(cand);
        }
        return out;
    };

    QueryPlan plan;
    plan.modulus = field.modulus();
    plan.tag = SchemeTag::intersecting;
    plan.s = s;
    plan.b = b;
    plan.output_indices.assign(crossing.indices.begin(), crossing.indices.end());
    plan.baseline_oblivious = oblivious_threshold(4, d, s, b);
    IntersectingMeta meta;
    meta.group1_size = n1;
    meta.anchors1 = pick_anchors(n1, crossing.z1);
    meta.anchors2 = pick_anchors(n2, crossing.z2);
    meta.degree_bound1 = bound1;
    meta.degree_bound2 = bound2;
    meta.z1 = crossing.z1;
    meta.z2 = crossing.z2;
    meta.output_anchors1 = {crossing.anchors[0], crossing.anchors[1]};
    meta.output_anchors2 = {crossing.anchors[2], crossing.anchors[3]};
    for (const auto& z : meta.anchors1) plan.queries.push_back(crossing.line1.eval(z));
    for (const auto& z : meta.anchors2) plan.queries.push_back(crossing.line2.eval(z));
    plan.meta = std::move(meta);
    return plan;
}

QueryPlan plan_composite(const MultiPoly& f, const std::vector<Point>& inputs, std::size_t s,
                         std::size_t b) {
    check_inputs(f, inputs);
    const PrimeField field(f.modulus());
    const u32 d = f.total_degree();
    const DepMode mode = f.is_homogeneous() ? DepMode::homogeneous : DepMode::affine;
    Partition partition = partition_minimal_dependent(inputs, mode);

    CompositeMeta meta;
    for (const auto& dep : partition.dependent_sets) {
        meta.subplans.push_back(mode == DepMode::homogeneous
                                    ? plan_homogeneous(f, inputs, dep, s, b)
                                    : plan_nonhomogeneous(f, inputs, dep, s, b));
    }
    if (!partition.leftovers.empty()) {
        std::vector<Point> rest;
        rest.reserve(partition.leftovers.size());
        for (std::size_t idx : partition.leftovers) rest.push_back(inputs[idx]);
        QueryPlan rep = plan_replication(field, rest, s, b, d);
        rep.output_indices = partition.leftovers;
        meta.subplans.push_back(std::move(rep));
    }

    QueryPlan plan;
    plan.modulus = field.modulus();
    plan.tag = SchemeTag::composite;
    plan.s = s;
    plan.b = b;
    plan.baseline_oblivious = oblivious_threshold(inputs.size(), d, s, b);
    for (const auto& sp : meta.subplans) {
        plan.queries.insert(plan.queries.end(), sp.queries.begin(), sp.queries.end());
        plan.output_indices.insert(plan.output_indices.end(), sp.output_indices.begin(),
                                   sp.output_indices.end());
    }
    plan.meta = std::move(meta);
    return plan;
}

namespace {

std::vector<u64> value_key(const Point& v) {
    std::vector<u64> key;
    key.reserve(v.size());
    for (const auto& c : v) key.push_back(c.value());
    return key;
}

DecodeResult decode_replication(const ReplicationMeta& meta,
                                const std::vector<Response>& responses) {
    DecodeResult out;
    std::vector<std::vector<const Point*>> groups(meta.group_count);
    for (const auto& r : responses) groups[r.worker / meta.copies].push_back(&r.value);
    for (std::size_t g = 0; g < meta.group_count; ++g) {
        if (groups[g].empty()) throw insufficient_responses_error(1, 0);
        std::map<std::vector<u64>, std::pair<std::size_t, const Point*>> tally;
        for (const Point* v : groups[g]) {
            auto [it, fresh] = tally.try_emplace(value_key(*v), 0, v);
            it->second.first += 1;
        }
        const Point* winner = nullptr;
        std::size_t best = 0;
        for (const auto& [key, entry] : tally)
            if (entry.first > best) {
                best = entry.first;
                winner = entry.second;
            }
        if (best * 2 <= groups[g].size())
            throw decoding_failure_error("no strict majority in replication group " +
                                         std::to_string(g));
        out.outputs.push_back(*winner);
    }
    return out;
}

DecodeResult decode_curve(const QueryPlan& plan, const CurveMeta& meta,
                          const std::vector<Response>& responses) {
    std::vector<Sample> samples;
    samples.reserve(responses.size());
    for (const auto& r : responses)
        samples.push_back(Sample{meta.query_anchors[r.worker],
                                 scale_point(r.value, meta.response_scale[r.worker])});
    Curve h = berlekamp_welch(samples, meta.degree_bound, plan.b);
    DecodeResult out;
    for (std::size_t j = 0; j < meta.output_anchors.size(); ++j)
        out.outputs.push_back(scale_point(h.eval(meta.output_anchors[j]), meta.output_unscale[j]));
    return out;
}

DecodeResult decode_intersecting(const QueryPlan& plan, const IntersectingMeta& meta,
                                 const std::vector<Response>& responses) {
    std::vector<Sample> g1, g2;
    for (const auto& r : responses) {
        if (r.worker < meta.group1_size)
            g1.push_back(Sample{meta.anchors1[r.worker], r.value});
        else
            g2.push_back(Sample{meta.anchors2[r.worker - meta.group1_size], r.value});
    }
    const std::size_t need1 = meta.degree_bound1 + 2 * plan.b + 1;
    const std::size_t need2 = meta.degree_bound2 + 2 * plan.b + 1;

    Curve h1 = Curve::constant(Point{FieldElem(0, plan.modulus)});
    Curve h2 = h1;
    if (g1.size() >= need1) {
        h1 = berlekamp_welch(g1, meta.degree_bound1, plan.b);
        g2.push_back(Sample{meta.z2, h1.eval(meta.z1)});
        h2 = berlekamp_welch(g2, meta.degree_bound2, plan.b);
    } else if (g2.size() >= need2) {
        h2 = berlekamp_welch(g2, meta.degree_bound2, plan.b);
        g1.push_back(Sample{meta.z1, h2.eval(meta.z2)});
        h1 = berlekamp_welch(g1, meta.degree_bound1, plan.b);
    } else {
        throw insufficient_responses_error(need1, g1.size());
    }

    DecodeResult out;
    for (const auto& z : meta.output_anchors1) out.outputs.push_back(h1.eval(z));
    for (const auto& z : meta.output_anchors2) out.outputs.push_back(h2.eval(z));
    return out;
}

DecodeResult decode_composite(const CompositeMeta& meta,
                              const std::vector<Response>& responses) {
    DecodeResult out;
    std::size_t offset = 0;
    for (const auto& sp : meta.subplans) {
        std::vector<Response> local;
        for (const auto& r : responses)
            if (r.worker >= offset && r.worker < offset + sp.workers())
                local.push_back(Response{r.worker - offset, r.value});
        DecodeResult sub = decode(sp, local);
        out.outputs.insert(out.outputs.end(), sub.outputs.begin(), sub.outputs.end());
        offset += sp.workers();
    }
    return out;
}

}  // namespace

DecodeResult decode(const QueryPlan& plan, const std::vector<Response>& responses) {
    std::set<std::size_t> seen;
    for (const auto& r : responses) {
        if (r.worker >= plan.workers())
            throw usage_error("response from unknown worker " + std::to_string(r.worker));
        if (!seen.insert(r.worker).second)
            throw usage_error("duplicate response from worker " + std::to_string(r.worker));
        if (!responses.empty() && r.value.size() != responses.front().value.size())
            throw usage_error("responses of mixed output dimension");
    }

    DecodeResult out = std::visit(
        [&](const auto& meta) -> DecodeResult {
            using M = std::decay_t<decltype(meta)>;
            if constexpr (std::is_same_v<M, ReplicationMeta>)
                return decode_replication(meta, responses);
            else if constexpr (std::is_same_v<M, CurveMeta>)
                return decode_curve(plan, meta, responses);
            else if constexpr (std::is_same_v<M, IntersectingMeta>)
                return decode_intersecting(plan, meta, responses);
            else
                return decode_composite(meta, responses);
        },
        plan.meta);
    out.used_responses.assign(seen.begin(), seen.end());
    return out;
}

}  // namespace ccomp
