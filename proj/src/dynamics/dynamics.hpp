// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "automorphisms/automorphism.hpp"
#include "invariants/invariants.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oredyn {

using PlanePoint = std::array<Rational, 2>;
std::string to_string(const PlanePoint& p);

template <class Point>
struct Orbit {
    /// sigma^-N(p), ..., p, ..., sigma^N(p).
    std::vector<Point> points;
    /// Least k in 1..N with sigma^k(p) = p.
    std::optional<std::int64_t> period;
};

Orbit<TorusPoint> orbit(const MonomialAutomorphism& sigma, const TorusPoint& p, std::int64_t steps);
Orbit<PlanePoint> orbit(const PlaneAutomorphism& sigma, const PlanePoint& p, std::int64_t steps);

struct TorsionPeriodicPoint {
    TorusPoint point;
    std::int64_t exact_period = 1;
};

struct MonomialPeriodicPoints {
    std::int64_t period = 1;
    std::int64_t torsion_bound = 1;
    /// Points with every coordinate a d-th root of unity and sigma^n(x) = x,
    /// ordered by exponent vector.
    std::vector<TorsionPeriodicPoint> points;
};

/// Throws ResourceError("torsion-bound") when d^n exceeds max_points.
MonomialPeriodicPoints periodic_points(const MonomialAutomorphism& sigma, std::int64_t n, std::int64_t d,
                                       std::size_t max_points = 1u << 20);

/// Number of d-torsion points fixed by sigma^n from the Smith form of M^n - I;
/// empty unless every coefficient of sigma^n is 1.
std::optional<Integer> torsion_periodic_count(const MonomialAutomorphism& sigma, std::int64_t n, std::int64_t d);

struct PlanePeriodicPoints {
    std::int64_t period = 1;
    /// The solution set of sigma^n(x) = x contains a curve; nothing is counted.
    bool positive_dimensional = false;
    /// Variable eliminated ('w' or 'z'); the eliminant is a polynomial in the other one.
    char eliminated = 'w';
    UPoly eliminant;
    /// Factor removed from the resultant (common zeros of both leading coefficients).
    UPoly extraneous{Rational(1)};
    /// Solutions over the algebraic closure with multiplicity.
    std::int64_t count = 0;
    /// Of those, the ones with exact period a proper divisor of n.
    std::int64_t lower_period_count = 0;
    /// Rational solutions with their exact periods.
    std::vector<std::pair<PlanePoint, std::int64_t>> rational_points;
};

PlanePeriodicPoints fixed_points(const PlaneAutomorphism& sigma);
/// Throws ResourceError("period-cap") when deg(sigma)^n exceeds max_degree.
PlanePeriodicPoints periodic_points(const PlaneAutomorphism& sigma, std::int64_t n, int max_degree = 16);

struct PeriodicWitness {
    std::int64_t period = 1;
    std::string description;
};

/// Produces periodic orbits one at a time: torsion points by increasing order
/// for monomial maps, resultant blocks by increasing period for plane maps.
class PeriodicOrbitStream {
public:
    PeriodicOrbitStream(Automorphism sigma, std::int64_t max_order = 24);
    std::optional<PeriodicWitness> next();

private:
    Automorphism sigma_;
    std::int64_t max_order_;
    std::int64_t order_ = 0;
    std::vector<PeriodicWitness> pending_;
    std::set<TorusPoint> seen_;
};

enum class OrbitStatus { DenseOrbitExists, NoDenseOrbit, Undecided };
enum class IrreducibleCount { Finite, CountablyInfinite, Uncountable, Unknown };
std::string to_string(OrbitStatus s);
std::string to_string(IrreducibleCount c);

struct OrbitOptions {
    int degree_bound = 3;
    std::int64_t period_cap = 6;
};

struct OrbitClassification {
    OrbitStatus status = OrbitStatus::Undecided;
    /// Verified invariant of sigma^period (NoDenseOrbit).
    std::optional<RationalInvariant> witness;
    /// Dense-orbit certificate (DenseOrbitExists).
    std::string certificate;
    IrreducibleCount max_irreducibles = IrreducibleCount::Unknown;
    /// Members when max_irreducibles is Finite.
    std::vector<std::string> finite_members;
    std::string reason;
};

OrbitClassification classify_orbits(const Automorphism& sigma, const OrbitOptions& options = {});

}  // namespace oredyn
