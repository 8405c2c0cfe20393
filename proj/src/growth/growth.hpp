// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "automorphisms/automorphism.hpp"
#include "exact/algebraic_real.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace oredyn {

struct QuasiUnipotence {
    bool holds = false;
    /// Smallest k >= 1 with M^k - I nilpotent, and that nilpotency index.
    std::int64_t k = 0;
    int nilpotency_index = 0;
    /// The candidate exponents that were tried, in order.
    std::vector<std::int64_t> searched;
};

/// Candidate exponents: lcms of sets of distinct orders d with sum phi(d) <= n.
std::vector<std::int64_t> quasi_unipotent_candidates(std::size_t n);
QuasiUnipotence is_quasi_unipotent(const IntegerMatrix& m);

enum class GrowthType { Finite, Infinite };
std::string to_string(GrowthType t);

struct GrowthData {
    enum class Certificate { Cyclotomic, DominantRoot, HenonDegree, ElementaryDegreeFit };
    AlgebraicReal rho{Rational(1)};
    int j = 0;
    Certificate certificate = Certificate::Cyclotomic;
    QuasiUnipotence cyclotomic;
    /// j is computed on the exponent lattice (rank stabilization at the
    /// dominant eigenvalues) rather than on a surface model.
    bool j_is_lattice_proxy = false;
    /// deg(sigma^n) for n = 1, 2, ... (plane maps).
    std::vector<int> degree_sequence;
    std::string note;

    GrowthType type() const { return rho == Rational(1) ? GrowthType::Finite : GrowthType::Infinite; }
};

std::string to_string(GrowthData::Certificate c);

struct DynamicalDegree {
    Integer value = 1;
    /// deg(sigma^n), n = 1..N, and whether d_{n+1} = value * d_n held on it.
    std::vector<int> degrees;
    bool degrees_exact = false;
    bool sequence_consistent = false;
};

/// Degrees of sigma^n restricted to two fixed lines: lower bounds for
/// deg(sigma^n). exact is set when every value meets the upper bound
/// (product of the word's elementary degrees)^n, which certifies it.
struct DegreeSequence {
    std::vector<int> degrees;
    bool exact = false;
};

/// Exact dynamical degree from the reduced word, cross-checked against
/// deg(sigma^n) for n <= max_n (stopping early once degrees exceed max_degree).
DynamicalDegree dynamical_degree(const PlaneAutomorphism& sigma, int max_n = 5, int max_degree = 1024);

/// deg(sigma^n) for n = 1..count, stopping once the degree exceeds max_degree.
DegreeSequence degree_sequence(const PlaneAutomorphism& sigma, int count, int max_degree = 4096);

GrowthData growth_data(const MonomialAutomorphism& sigma);
GrowthData growth_data(const PlaneAutomorphism& sigma);
GrowthData growth_data(const Automorphism& sigma);
GrowthType growth_type(const Automorphism& sigma);

}  // namespace oredyn
