#include "ccomp/poly.hpp"

#include <algorithm>
#include <map>

#include "ccomp/errors.hpp"
#include "ccomp/linalg.hpp"

namespace ccomp {

MultiPoly MultiPoly::from_components(const PrimeField& field, std::size_t arity,
                                     std::vector<std::vector<Term>> components) {
    u32 total = 0;
    std::vector<std::vector<Term>> normalized;
    normalized.reserve(components.size());
    for (const auto& comp : components) {
        std::map<std::vector<u32>, FieldElem> merged;
        for (const auto& term : comp) {
            if (term.exps.size() != arity)
                throw usage_error("polynomial term exponent vector has wrong length");
            if (term.coeff.modulus() != field.modulus())
                throw usage_error("polynomial coefficient from wrong field");
            auto it = merged.find(term.exps);
            if (it == merged.end())
                merged.emplace(term.exps, term.coeff);
            else
                it->second += term.coeff;
        }
        std::vector<Term> out;
        for (auto& [exps, coeff] : merged) {
            if (coeff.is_zero()) continue;
            u32 deg = 0;
            for (u32 e : exps) deg += e;
            total = std::max(total, deg);
            out.push_back(Term{exps, coeff});
        }
        normalized.push_back(std::move(out));
    }
    return MultiPoly(field.modulus(), arity, std::move(normalized), total);
}

MultiPoly MultiPoly::random(const PrimeField& field, std::size_t arity, std::size_t out_dim,
                            u32 degree, std::size_t terms_per_component, bool homogeneous,
                            SplitMix64& rng) {
    auto random_exps = [&](u32 target, bool exact) {
        std::vector<u32> exps(arity, 0);
        u32 total = exact ? target : static_cast<u32>(rng.below(target + 1));
        for (u32 i = 0; i < total; ++i) exps[rng.below(arity)] += 1;
        return exps;
    };
    std::vector<std::vector<Term>> components(out_dim);
    for (std::size_t c = 0; c < out_dim; ++c) {
        for (std::size_t t = 0; t < terms_per_component; ++t) {
            // The first term of the first component carries full degree so the
            // generated polynomial has the requested total degree.
            bool exact = homogeneous || (c == 0 && t == 0);
            FieldElem coeff = field.elem(1 + rng.below(field.modulus() - 1));
            components[c].push_back(Term{random_exps(degree, exact), coeff});
        }
    }
    return from_components(field, arity, std::move(components));
}

Point MultiPoly::eval(const Point& x) const {
    if (x.size() != arity_) throw usage_error("evaluation point has wrong dimension");
    for (const auto& c : x)
        if (c.modulus() != modulus_) throw usage_error("evaluation point from wrong field");
    Point out;
    out.reserve(components_.size());
    for (const auto& comp : components_) {
        FieldElem acc(0, modulus_);
        for (const auto& term : comp) {
            FieldElem v = term.coeff;
            for (std::size_t i = 0; i < arity_; ++i)
                if (term.exps[i] != 0) v *= x[i].pow(term.exps[i]);
            acc += v;
        }
        out.push_back(acc);
    }
    return out;
}

bool MultiPoly::is_homogeneous() const {
    for (const auto& comp : components_) {
        for (const auto& term : comp) {
            u32 deg = 0;
            for (u32 e : term.exps) deg += e;
            if (deg != total_degree_) return false;
        }
    }
    return true;
}

MultiPoly MultiPoly::homogenized() const {
    std::vector<std::vector<Term>> lifted;
    lifted.reserve(components_.size());
    for (const auto& comp : components_) {
        std::vector<Term> out;
        out.reserve(comp.size());
        for (const auto& term : comp) {
            u32 deg = 0;
            for (u32 e : term.exps) deg += e;
            std::vector<u32> exps;
            exps.reserve(arity_ + 1);
            exps.push_back(total_degree_ - deg);
            exps.insert(exps.end(), term.exps.begin(), term.exps.end());
            out.push_back(Term{std::move(exps), term.coeff});
        }
        lifted.push_back(std::move(out));
    }
    return MultiPoly(modulus_, arity_ + 1, std::move(lifted), total_degree_);
}

Curve::Curve(std::size_t dim, u64 modulus, std::vector<Point> coeffs)
    : dim_(dim), modulus_(modulus), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.size() != dim_) throw usage_error("curve coefficient vector has wrong dimension");
    while (!coeffs_.empty() && point_is_zero(coeffs_.back())) coeffs_.pop_back();
}

Curve Curve::constant(Point value) {
    if (value.empty()) throw usage_error("constant curve needs a nonempty value");
    const u64 p = value[0].modulus();
    const std::size_t dim = value.size();
    std::vector<Point> coeffs;
    coeffs.push_back(std::move(value));
    return Curve(dim, p, std::move(coeffs));
}

Point Curve::eval(const FieldElem& z) const {
    Point acc(dim_, FieldElem(0, modulus_));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        for (std::size_t j = 0; j < dim_; ++j) acc[j] = acc[j] * z + (*it)[j];
    return acc;
}

bool Curve::operator==(const Curve& o) const {
    if (dim_ != o.dim_ || modulus_ != o.modulus_ || coeffs_.size() != o.coeffs_.size())
        return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!points_equal(coeffs_[i], o.coeffs_[i])) return false;
    return true;
}

namespace {

void check_distinct_anchors(const std::vector<Sample>& samples) {
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].z == samples[j].z)
                throw usage_error("duplicate sample anchor " + std::to_string(samples[i].z.value()));
}

}  // namespace

Curve interpolate(const std::vector<Sample>& samples, std::size_t degree_bound) {
    if (samples.size() < degree_bound + 1)
        throw usage_error("interpolation needs " + std::to_string(degree_bound + 1) +
                          " samples, got " + std::to_string(samples.size()));
    check_distinct_anchors(samples);
    const std::size_t dim = samples[0].y.size();
    const u64 p = samples[0].z.modulus();
    const std::size_t n = degree_bound + 1;

    std::vector<Point> coeffs(n, Point(dim, FieldElem(0, p)));
    std::vector<FieldElem> basis(n, FieldElem(0, p));
    for (std::size_t i = 0; i < n; ++i) {
        // Expand prod_{j != i} (z - z_j) / (z_i - z_j) into basis[].
        std::fill(basis.begin(), basis.end(), FieldElem(0, p));
        basis[0] = FieldElem(1, p);
        std::size_t len = 1;
        FieldElem denom(1, p);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t t = len; t > 0; --t)
                basis[t] = basis[t - 1] - samples[j].z * basis[t];
            basis[0] = -samples[j].z * basis[0];
            ++len;
            denom *= samples[i].z - samples[j].z;
        }
        FieldElem scale = denom.inv();
        for (std::size_t t = 0; t < n; ++t) {
            FieldElem w = basis[t] * scale;
            for (std::size_t c = 0; c < dim; ++c) coeffs[t][c] += w * samples[i].y[c];
        }
    }
    Curve fitted(dim, p, std::move(coeffs));
    for (std::size_t i = n; i < samples.size(); ++i) {
        if (!points_equal(fitted.eval(samples[i].z), samples[i].y))
            throw inconsistent_samples_error("sample at anchor " +
                                             std::to_string(samples[i].z.value()) +
                                             " disagrees with degree-" +
                                             std::to_string(degree_bound) + " fit");
    }
    return fitted;
}

Curve berlekamp_welch(const std::vector<Sample>& samples, std::size_t degree_bound,
                      std::size_t max_corruptions) {
    const std::size_t b = max_corruptions;
    const std::size_t needed = degree_bound + 2 * b + 1;
    if (samples.size() < needed) throw insufficient_responses_error(needed, samples.size());
    check_distinct_anchors(samples);
    const std::size_t dim = samples[0].y.size();
    const u64 p = samples[0].z.modulus();
    const PrimeField field(p);
    const std::size_t nq = degree_bound + b + 1;  // coefficients of Q
    const std::size_t n = samples.size();

    std::vector<Point> coeffs(degree_bound + 1, Point(dim, field.zero()));
    for (std::size_t c = 0; c < dim; ++c) {
        // Q(z_i) - y_i * (e_0 + e_1 z_i + ... + e_{b-1} z_i^{b-1}) = y_i z_i^b
        std::vector<std::vector<FieldElem>> a(n, std::vector<FieldElem>(nq + b, field.zero()));
        std::vector<FieldElem> rhs(n, field.zero());
        for (std::size_t i = 0; i < n; ++i) {
            FieldElem zp = field.one();
            for (std::size_t j = 0; j < nq; ++j) {
                a[i][j] = zp;
                zp *= samples[i].z;
            }
            zp = field.one();
            for (std::size_t j = 0; j < b; ++j) {
                a[i][nq + j] = -(samples[i].y[c] * zp);
                zp *= samples[i].z;
            }
            rhs[i] = samples[i].y[c] * samples[i].z.pow(static_cast<u64>(b));
        }
        auto sol = gf_solve(std::move(a), std::move(rhs));
        if (!sol) throw decoding_failure_error("no (Q, E) pair fits the received samples");

        std::vector<FieldElem> q(sol->begin(), sol->begin() + nq);
        std::vector<FieldElem> e(sol->begin() + nq, sol->end());
        e.push_back(field.one());  // monic

        // Long division Q / E; any remainder means too many corruptions.
        std::vector<FieldElem> rem = q;
        std::vector<FieldElem> quot(degree_bound + 1, field.zero());
        for (std::size_t d = nq; d-- > b;) {
            FieldElem f = rem[d];  // E is monic, no inversion needed
            quot[d - b] = f;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j <= b; ++j) rem[d - b + j] -= f * e[j];
        }
        for (std::size_t j = 0; j < b; ++j)
            if (!rem[j].is_zero())
                throw decoding_failure_error("error locator does not divide Q");

        for (std::size_t t = 0; t <= degree_bound; ++t) coeffs[t][c] = quot[t];
    }

    Curve fitted(dim, p, std::move(coeffs));
    // The corruption budget must cover every disagreement, per component.
    std::vector<std::size_t> mismatches(dim, 0);
    for (const auto& s : samples) {
        Point v = fitted.eval(s.z);
        for (std::size_t c = 0; c < dim; ++c)
            if (v[c] != s.y[c]) ++mismatches[c];
    }
    for (std::size_t c = 0; c < dim; ++c)
        if (mismatches[c] > b)
            throw decoding_failure_error("fitted curve disagrees with " +
                                         std::to_string(mismatches[c]) + " samples, budget " +
                                         std::to_string(b));
    return fitted;
}

}  // namespace ccomp
