// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "automorphisms/automorphism.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oredyn {

/// Pairwise coprime integers > 1 such that every |x| > 0 in the input is a
/// product of their powers.
std::vector<Integer> coprime_base(const std::vector<Integer>& xs);

struct InvariantMonomials {
    std::int64_t period = 1;
    /// Z-basis of ker(M^m - I) and the scalar sigma^m multiplies each by.
    std::vector<IntVector> fixed_lattice;
    std::vector<Rational> fixed_scalars;
    /// Z-basis of the sublattice of exponents a with sigma^m(u^a) = u^a.
    std::vector<IntVector> invariant_lattice;

    bool has_invariant() const { return !invariant_lattice.empty(); }
    std::vector<LaurentPoly> invariants() const;
};

InvariantMonomials invariant_monomials(const MonomialAutomorphism& sigma, std::int64_t m);

enum class WitnessKind { Monomial, Fibration, BruteForce };
std::string to_string(WitnessKind k);

/// p / q with sigma^m(p) q = p sigma^m(q).
struct RationalInvariant {
    LaurentPoly p, q;
    std::int64_t period = 1;
    WitnessKind kind = WitnessKind::BruteForce;
    std::string to_string(const std::vector<std::string>& vars) const;
};

/// sigma^m(f) = eigenvalue * f.
struct SemiInvariant {
    LaurentPoly f;
    Rational eigenvalue;
    std::int64_t period = 1;
};

struct InvariantSearch {
    int degree_bound = 0;
    std::int64_t period = 1;
    std::size_t space_dimension = 0;
    /// Dimension of the largest sigma^m-stable subspace of the search space.
    std::size_t stable_dimension = 0;
    std::vector<RationalInvariant> invariants;
    std::vector<SemiInvariant> semi_invariants;

    bool found() const { return !invariants.empty(); }
};

/// Exhaustive search for p / q with deg p, deg q <= D. Plane maps use
/// polynomials of total degree <= D, monomial maps Laurent polynomials with
/// every exponent in [-D, D]. Throws ResourceError("degree-bound") when the
/// linear algebra would exceed max_dimension.
InvariantSearch bounded_invariant_search(const Automorphism& sigma, int degree_bound, std::int64_t m,
                                         std::size_t max_dimension = 6000);

struct FibrationReport {
    /// False when no rational triangular form was found.
    bool has_rational_form = false;
    /// h o sigma = beta h + gamma.
    LaurentPoly h;
    Rational beta = 1, gamma = 0;
    /// Order of x -> beta x + gamma; 0 when infinite.
    std::int64_t base_order = 0;
    std::vector<RationalInvariant> invariants;
    std::optional<SemiInvariant> semi_invariant;
};

/// Throws InputError for Henon-type maps.
FibrationReport invariant_fibration(const PlaneAutomorphism& sigma);

struct PeriodicDirection {
    /// Primitive a with M^period a = sign * a; the subtori u^a = c.
    IntVector a;
    std::int64_t period = 1;
    int sign = 1;
    /// sigma^k(u^a) = scalar * u^a for the least k >= 1 with M^k a = a.
    std::int64_t return_time = 1;
    Rational scalar = 1;
    /// Infinitely many members u^a = c are periodic (scalar = +-1).
    bool family_periodic = false;
};

struct PeriodicDivisors {
    std::int64_t bound = 1;
    std::vector<PeriodicDirection> directions;
    /// Some M^m = +-I with m <= bound, so every direction is periodic.
    bool all_directions = false;
    std::int64_t all_period = 0;
    bool infinitely_many = false;
};

PeriodicDivisors periodic_divisors(const MonomialAutomorphism& sigma, std::int64_t bound);

}  // namespace oredyn
