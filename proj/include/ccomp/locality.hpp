#pragma once

#include <cstdint>
#include <vector>

#include "ccomp/field.hpp"
#include "ccomp/parallel.hpp"

namespace ccomp {

std::size_t hamming_distance(const std::vector<u64>& a, const std::vector<u64>& b);
bool in_hamming_ball(const std::vector<u64>& center, const std::vector<u64>& c, std::size_t r);

/// Evaluation-table code of the class of all m-variate polynomials of total
/// degree <= d over GF(q): one codeword per function, one symbol per domain
/// point. The domain is enumerated lexicographically, which fixes the meaning
/// of every symbol index. Codewords are deduplicated (set semantics).
struct AssociatedCode {
    u64 modulus = 0;
    std::size_t arity = 0;
    u32 degree = 0;
    std::vector<Point> domain;               // q^m points, lex order
    std::vector<std::vector<u64>> codewords; // sorted, unique

    std::size_t length() const { return domain.size(); }
};

// Budget guard: q^m <= 32 and class size <= 10^4.
AssociatedCode build_associated_code(const PrimeField& field, std::size_t arity, u32 degree);

/// (s+1)-fold symbol replication of a code: symbol j of the repeated codeword
/// carries the base symbol j mod n with copy label j / n.
struct RepeatedCode {
    AssociatedCode base;
    std::size_t s = 0;

    std::size_t length() const { return (s + 1) * base.length(); }
    u64 symbol(const std::vector<u64>& codeword, std::size_t j) const {
        return codeword[j % base.length()];
    }
};

struct SymbolLocality {
    std::size_t locality;
    std::vector<std::size_t> witness;  // subset of [(s+1)n], lex-first minimal
};

/// Brute-force computational locality of the symbols indexed by I: the
/// smallest query set J of replicated symbols such that any two codewords
/// within Hamming distance s on J agree exactly on I. Candidate sets are
/// enumerated by ascending size, lexicographically within a size; the scan
/// within one size may run on all cores, the winner is the lowest-ranked
/// feasible candidate either way. Requires (s+1)*n <= 14.
SymbolLocality computational_locality_symbols(const RepeatedCode& code,
                                              const std::vector<std::size_t>& target_symbols,
                                              Exec exec = Exec::parallel);

struct CodeLocality {
    std::size_t locality;                    // max over all size-k index sets
    std::vector<std::size_t> worst_index_set;
    std::vector<std::size_t> witness;
};

CodeLocality computational_locality(const AssociatedCode& code, std::size_t k, std::size_t s,
                                    Exec exec = Exec::parallel);

}  // namespace ccomp
