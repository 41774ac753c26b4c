#pragma once

#include <cstdint>
#include <string>

#include "pcp/nest.hpp"
#include "pcp/report.hpp"

namespace pcp {

// Configuration shared by the verification suites. Deterministic given the
// seed: same config => byte-identical reports.
struct SessionConfig {
    int n = 2;
    int k = 1;
    std::uint64_t seed = 0;
    std::size_t samples = 500;
    // Exhaustive-grid bounds.
    std::size_t max_word_len = 6;
    long grid_max_abs_k = 3;
    unsigned grid_max_exp = 4;

    // Throws std::invalid_argument (a usage error) on bad bounds.
    void validate() const;

    Session session() const { return Session{n, k}; }
};

// S_i* S_j = delta_ij I, sum S_i S_i* = I (always at k = 1).
RelationReport run_cuntz_suite(const SessionConfig& cfg);
// Cuntz-Krieger relations of the k-vertex n-loop graph at the session's k.
RelationReport run_matrix_suite(const SessionConfig& cfg);
// Cocycle multiplicativity (exhaustive at word length <= 3 plus random),
// graph consistency, representative independence, Y-level cocycle checks.
RelationReport run_groupoid_suite(const SessionConfig& cfg);
// Volterra nest: generator invariance over the grid, descending-interval
// consistency, monotonicity, closure properties of the named predicates.
RelationReport run_nest_suite(const SessionConfig& cfg);
// Group/action laws, *-algebra axioms, opat homomorphism, substitute-unit
// strictness, UHF-core closure.
RelationReport run_algebra_axioms_suite(const SessionConfig& cfg);

// name in {cuntz, matrix, groupoid, nest, algebra-axioms, all}; throws
// std::invalid_argument for unknown names or invalid config.
RelationReport run_suite(const std::string& name, const SessionConfig& cfg);

}  // namespace pcp
