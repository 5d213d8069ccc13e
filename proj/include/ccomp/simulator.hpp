#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccomp/parallel.hpp"
#include "ccomp/poly.hpp"
#include "ccomp/schemes.hpp"

namespace ccomp {

enum class AdversaryMode { exhaustive, seeded_random };

/// Adversarial straggler/corruption injection. Exhaustive mode enumerates all
/// drop subsets of size <= s_budget crossed with all corruption-position
/// subsets of size <= b_budget among the survivors, with a fixed number of
/// seeded corruption values per position pattern. When the pattern count
/// would exceed exhaustive_limit, the run falls back to seeded-random
/// patterns and the report is flagged as sampled.
struct Adversary {
    AdversaryMode mode = AdversaryMode::exhaustive;
    std::size_t s_budget = 0;
    std::size_t b_budget = 0;
    u64 seed = 0;
    std::size_t corruption_variants = 3;
    std::size_t random_patterns = 1000;
    std::size_t exhaustive_limit = 100000;
};

struct PatternFailure {
    std::size_t pattern;  // rank in the deterministic pattern order
    std::vector<std::size_t> dropped;
    std::vector<std::size_t> corrupted;
    std::size_t variant;
    std::string error;  // decode error, or "wrong output" on a silent mismatch
};

struct RunReport {
    std::string scheme;
    std::size_t workers = 0;
    std::size_t k = 0;
    std::size_t s = 0, b = 0;
    std::size_t baseline_oblivious = 0;
    std::size_t patterns_tested = 0;
    bool sampled = false;
    std::vector<PatternFailure> failures;  // sorted by pattern rank
    u64 seed = 0;
    double wall_ms = 0;  // excluded from determinism guarantees
};

/// Execute a plan against every adversary pattern: compute worker responses,
/// apply drops and corruptions, decode, and compare with direct evaluation.
/// Decode errors become failure records, never exceptions. Patterns are
/// independent and may be evaluated on all cores; the failure list is keyed
/// by pattern rank and identical under either execution policy.
RunReport run(const QueryPlan& plan, const MultiPoly& f, const std::vector<Point>& inputs,
              const Adversary& adversary, Exec exec = Exec::parallel);

}  // namespace ccomp
