#include "ccomp/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "ccomp/errors.hpp"
#include "ccomp/rng.hpp"

namespace ccomp {

namespace {

struct Pattern {
    std::vector<std::size_t> dropped;
    std::vector<std::size_t> corrupted;
    std::size_t variant = 0;
};

void subsets_up_to(std::size_t n, std::size_t max_size,
                   const std::function<void(const std::vector<std::size_t>&)>& emit) {
    std::vector<std::size_t> subset;
    emit(subset);
    for (std::size_t size = 1; size <= std::min(n, max_size); ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            emit(idx);
            std::size_t d = size;
            while (d > 0 && idx[d - 1] == n - size + (d - 1)) --d;
            if (d == 0) break;
            ++idx[d - 1];
            for (std::size_t i = d; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
}

double count_exhaustive(std::size_t w, const Adversary& adv) {
    auto binom = [](std::size_t n, std::size_t r) {
        double v = 1;
        for (std::size_t i = 0; i < r; ++i) v *= double(n - i) / double(i + 1);
        return v;
    };
    double total = 0;
    for (std::size_t ds = 0; ds <= std::min(w, adv.s_budget); ++ds) {
        double drops = binom(w, ds);
        double per_drop = 1;  // empty corruption set
        for (std::size_t cs = 1; cs <= std::min(w - ds, adv.b_budget); ++cs)
            per_drop += binom(w - ds, cs) * double(adv.corruption_variants);
        total += drops * per_drop;
    }
    return total;
}

std::vector<Pattern> exhaustive_patterns(std::size_t w, const Adversary& adv) {
    std::vector<Pattern> out;
    subsets_up_to(w, adv.s_budget, [&](const std::vector<std::size_t>& drops) {
        std::vector<std::size_t> survivors;
        for (std::size_t i = 0; i < w; ++i)
            if (std::find(drops.begin(), drops.end(), i) == drops.end()) survivors.push_back(i);
        subsets_up_to(survivors.size(), adv.b_budget,
                      [&](const std::vector<std::size_t>& corr_local) {
                          std::vector<std::size_t> corrupted;
                          for (std::size_t l : corr_local) corrupted.push_back(survivors[l]);
                          std::size_t variants = corrupted.empty() ? 1 : adv.corruption_variants;
                          for (std::size_t v = 0; v < variants; ++v)
                              out.push_back(Pattern{drops, corrupted, v});
                      });
    });
    return out;
}

std::vector<std::size_t> sample_subset(SplitMix64& rng, std::size_t n, std::size_t size) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size; ++i) {
        std::size_t j = i + rng.below(n - i);
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Pattern> random_patterns(std::size_t w, const Adversary& adv) {
    std::vector<Pattern> out;
    out.reserve(adv.random_patterns);
    for (std::size_t r = 0; r < adv.random_patterns; ++r) {
        SplitMix64 rng(derive_seed(adv.seed, r));
        Pattern pat;
        pat.dropped = sample_subset(rng, w, rng.below(std::min(w, adv.s_budget) + 1));
        std::vector<std::size_t> survivors;
        for (std::size_t i = 0; i < w; ++i)
            if (std::find(pat.dropped.begin(), pat.dropped.end(), i) == pat.dropped.end())
                survivors.push_back(i);
        auto local = sample_subset(
            rng, survivors.size(), rng.below(std::min(survivors.size(), adv.b_budget) + 1));
        for (std::size_t l : local) pat.corrupted.push_back(survivors[l]);
        pat.variant = r;
        out.push_back(std::move(pat));
    }
    return out;
}

}  // namespace

RunReport run(const QueryPlan& plan, const MultiPoly& f, const std::vector<Point>& inputs,
              const Adversary& adversary, Exec exec) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t w = plan.workers();
    const PrimeField field(plan.modulus);

    std::vector<Point> honest;
    honest.reserve(w);
    for (const auto& q : plan.queries) honest.push_back(f.eval(q));
    std::vector<Point> truth;
    truth.reserve(plan.output_indices.size());
    for (std::size_t idx : plan.output_indices) truth.push_back(f.eval(inputs.at(idx)));

    RunReport report;
    report.scheme = scheme_name(plan.tag);
    report.workers = w;
    report.k = plan.output_indices.size();
    report.s = plan.s;
    report.b = plan.b;
    report.baseline_oblivious = plan.baseline_oblivious;
    report.seed = adversary.seed;

    std::vector<Pattern> patterns;
    if (adversary.mode == AdversaryMode::exhaustive &&
        count_exhaustive(w, adversary) <= double(adversary.exhaustive_limit)) {
        patterns = exhaustive_patterns(w, adversary);
    } else {
        patterns = random_patterns(w, adversary);
        report.sampled = true;
    }
    report.patterns_tested = patterns.size();

    const std::int64_t n = static_cast<std::int64_t>(patterns.size());
    std::vector<std::string> errors(patterns.size());
    auto evaluate = [&](std::int64_t pi) {
        const Pattern& pat = patterns[pi];
        std::vector<Response> responses;
        responses.reserve(w);
        SplitMix64 rng(derive_seed(adversary.seed ^ 0x5bd1e995u, (u64(pi) << 8) | pat.variant));
        for (std::size_t i = 0; i < w; ++i) {
            if (std::find(pat.dropped.begin(), pat.dropped.end(), i) != pat.dropped.end())
                continue;
            Point value = honest[i];
            if (std::find(pat.corrupted.begin(), pat.corrupted.end(), i) !=
                pat.corrupted.end()) {
                // Additive offset, nonzero in every coordinate, so the value
                // is guaranteed to be wrong.
                for (auto& c : value) c += field.elem(1 + rng.below(field.modulus() - 1));
            }
            responses.push_back(Response{i, std::move(value)});
        }
        try {
            DecodeResult decoded = decode(plan, responses);
            for (std::size_t j = 0; j < truth.size(); ++j)
                if (!points_equal(decoded.outputs.at(j), truth[j])) {
                    errors[pi] = "wrong output " + std::to_string(j);
                    return;
                }
        } catch (const std::exception& ex) {
            errors[pi] = ex.what();
        }
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t pi = 0; pi < n; ++pi) evaluate(pi);
    } else {
        for (std::int64_t pi = 0; pi < n; ++pi) evaluate(pi);
    }

    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        if (errors[pi].empty()) continue;
        report.failures.push_back(PatternFailure{pi, patterns[pi].dropped, patterns[pi].corrupted,
                                                 patterns[pi].variant, errors[pi]});
    }

    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace ccomp
