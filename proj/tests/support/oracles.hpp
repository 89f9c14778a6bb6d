#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "monodyn/field.hpp"
#include "monodyn/matrix.hpp"

namespace oracle {

// Degree of the remainder of tau^c divided by tau^q - tau, computed by
// literal polynomial long division over the integers.
std::uint32_t reduce_by_division(std::uint64_t c, std::uint64_t q);

// Number of walks of the given length from i to j, by direct recursion over
// the multigraph edges (an entry k of the adjacency matrix contributes k
// parallel continuations).
std::uint64_t count_walks_recursive(const monodyn::ExponentMatrix& adj,
                                    std::uint32_t i, std::uint32_t j,
                                    std::uint32_t length);

// Loop number by its definition: the smallest positive difference between
// the lengths of two closed walks through a vertex of the component.  Scans
// closed-walk lengths 1..window with boolean reachability and minimizes
// over the component's vertices.  Returns 0 when no vertex sees two
// distinct closed-walk lengths inside the window.
std::uint64_t loop_number_min_difference(
    const monodyn::ExponentMatrix& adj,
    const std::vector<std::uint32_t>& component, std::uint32_t window);

// Evaluation over a prime field by arithmetic modulo p, using the fixed
// generators 1, 2, 2, 3 for p = 2, 3, 5, 7.  States are base-p digit
// vectors: 0 is the field zero, digit d >= 1 is g^(d-1).
std::vector<std::uint32_t> evaluate_mod_p(
    const monodyn::ExponentMatrix& m, const std::vector<std::uint32_t>& digits);

// Deterministic populations.
monodyn::ExponentMatrix random_matrix(std::mt19937_64& rng,
                                      const monodyn::FieldSize& field,
                                      std::uint32_t n);
monodyn::ExponentMatrix random_strict_upper(std::mt19937_64& rng,
                                            const monodyn::FieldSize& field,
                                            std::uint32_t n);
// Lower triangular with every diagonal entry q-1.
monodyn::ExponentMatrix random_triangular_diag(std::mt19937_64& rng,
                                               const monodyn::FieldSize& field,
                                               std::uint32_t n);
// Rows are all-bottom with probability zero_percent/100.
monodyn::ExtExponentMatrix random_extended(std::mt19937_64& rng,
                                           const monodyn::FieldSize& field,
                                           std::uint32_t n,
                                           std::uint32_t zero_percent);

}  // namespace oracle
