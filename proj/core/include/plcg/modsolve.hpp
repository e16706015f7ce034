#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plcg/intmat.hpp"
#include "plcg/util.hpp"

namespace plcg {

/// Certificate that A x = b has no solution mod p^N: a row combination u with
/// u^T A = 0 (mod p^N) and u^T b != 0 (mod p^N).
struct Infeasibility {
    std::vector<std::int64_t> u;
    std::int64_t residual = 0;  // u^T b mod p^N, nonzero
};

/// Result of solving A x = b over Z/p^N.
struct ModSolveResult {
    bool solvable = false;
    std::vector<std::int64_t> particular;  // one solution, entries in [0, p^N)
    /// Generators of the solution kernel {x : A x = 0 mod p^N} as columns.
    /// Every kernel element is an integer combination of these mod p^N.
    IntMat kernel;
    std::optional<Infeasibility> infeasible;
};

/// Z/p^N is not a field: elimination pivots on entries of minimal p-adic
/// valuation and divides rows by their unit parts only. Produces a particular
/// solution, kernel generators, and a verifiable infeasibility certificate.
ModSolveResult solve_mod_pn(const IntMat& a, const std::vector<std::int64_t>& b,
                            std::int64_t p, int n);

/// Kernel generators only.
IntMat kernel_mod_pn(const IntMat& a, std::int64_t p, int n);

/// Enumerate the full solution set of A x = b mod p^N (s = #columns of A).
/// Throws EnumerationCap if the set would exceed `cap` elements.
std::vector<std::vector<std::int64_t>> enumerate_solutions_mod_pn(
    const IntMat& a, const std::vector<std::int64_t>& b, std::int64_t p, int n,
    std::size_t cap = 1u << 22);

}  // namespace plcg
