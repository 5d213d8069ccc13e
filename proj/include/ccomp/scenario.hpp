#pragma once

#include <optional>
#include <string>

#include "ccomp/json_io.hpp"
#include "ccomp/poly.hpp"
#include "ccomp/schemes.hpp"
#include "ccomp/simulator.hpp"

namespace ccomp {

/// One experiment: a field, a function (literal terms or a seeded generator),
/// input points (explicit or a seeded structural generator), the tolerated
/// (s, b), a scheme choice ("auto" plans the composite scheme), and the
/// adversary configuration.
struct Scenario {
    u64 modulus = 65537;
    json function;
    json inputs;
    std::size_t s = 0;
    std::size_t b = 0;
    std::string scheme = "auto";
    Adversary adversary;
    u64 seed = 0;
};

Scenario scenario_from_json(const json& j);

MultiPoly scenario_function(const Scenario& sc);
std::vector<Point> scenario_inputs(const Scenario& sc, const MultiPoly& f);
QueryPlan scenario_plan(const Scenario& sc, const MultiPoly& f, const std::vector<Point>& inputs);

// Deterministic structural input generators.
std::vector<Point> generate_generic(const PrimeField& field, std::size_t k, std::size_t m,
                                    SplitMix64& rng);
std::vector<Point> generate_dependent(const PrimeField& field, std::size_t k, std::size_t m,
                                      DepMode mode, SplitMix64& rng);
std::vector<Point> generate_collinear(const PrimeField& field, std::size_t k, std::size_t m,
                                      SplitMix64& rng);
std::vector<Point> generate_crossing(const PrimeField& field, std::size_t m, SplitMix64& rng);

}  // namespace ccomp
