// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "automorphisms/monomial.hpp"
#include "exact/polygon.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace oredyn {

/// sum_n s_n t^n in S[t, t^-1; sigma], coefficients on the left, t s = sigma(s) t.
class OreElement {
public:
    OreElement() = default;
    explicit OreElement(std::size_t arity) : arity_(arity) {}
    static OreElement term(const LaurentPoly& s, std::int64_t n);
    static OreElement t_power(std::size_t arity, std::int64_t n);

    std::size_t arity() const { return arity_; }
    const std::map<std::int64_t, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly coeff(std::int64_t n) const;
    /// No negative powers of t.
    bool in_skew_polynomial_ring() const { return terms_.empty() || terms_.begin()->first >= 0; }

    void add_term(const LaurentPoly& s, std::int64_t n);
    OreElement& operator+=(const OreElement& o);
    OreElement& operator-=(const OreElement& o);
    friend OreElement operator+(OreElement a, const OreElement& b) { return a += b; }
    friend OreElement operator-(OreElement a, const OreElement& b) { return a -= b; }
    friend bool operator==(const OreElement& a, const OreElement& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    std::size_t arity_ = 0;
    std::map<std::int64_t, LaurentPoly> terms_;
};

/// (s t^m)(r t^n) = s sigma^m(r) t^(m+n), extended bilinearly.
OreElement ore_mul(const OreElement& a, const OreElement& b, const MonomialAutomorphism& sigma);

/// {u^a = value} with a primitive and sign-normalized.
struct SubtorusComponent {
    IntVector a;
    Rational value = 1;
    friend bool operator==(const SubtorusComponent&, const SubtorusComponent&) = default;
};

struct PointComponent {
    TorusPoint point;
    friend bool operator==(const PointComponent& x, const PointComponent& y) { return x.point == y.point; }
};

using IdealComponent = std::variant<SubtorusComponent, PointComponent>;

/// Normalizes a to a primitive, sign-normalized direction; throws InputError
/// for non-primitive a (u^(ka) = c is reducible).
SubtorusComponent subtorus(IntVector a, const Rational& value);
std::string to_string(const IdealComponent& c, std::size_t arity);
bool vanishes_on(const LaurentPoly& f, const IdealComponent& c);

/// sigma(I(Y)) = I(image) for the ring automorphism sigma.
IdealComponent image_under(const IdealComponent& c, const MonomialAutomorphism& sigma);

struct InvariantIdealSpec {
    std::size_t arity = 2;
    std::vector<IdealComponent> components;
    /// Generators over Q of the product of the component ideals (same radical).
    std::vector<LaurentPoly> generators;
    /// sigma maps the ideal of component i to that of component permutation[i].
    std::vector<std::size_t> permutation;
};

/// Throws InputError when sigma does not permute the components.
InvariantIdealSpec make_ideal_spec(std::vector<IdealComponent> components, const MonomialAutomorphism& sigma);

struct PrimeCertificate {
    bool prime = false;
    /// Orbits of the component permutation; prime iff there is exactly one.
    std::vector<std::vector<std::size_t>> cycles;
};

PrimeCertificate is_homogeneous_prime(const InvariantIdealSpec& spec);

enum class OreRing { T, U };

/// Graded ideal of T or U: either P = sum_n I t^n for a sigma-invariant I, or
/// (U only) Q = J + S t + S t^2 + ... for a prime J of S.
class HomogeneousIdeal {
public:
    static HomogeneousIdeal from_invariant(const InvariantIdealSpec& spec, OreRing ring);
    static HomogeneousIdeal u_family(const IdealComponent& j, std::size_t arity);

    OreRing ring() const { return ring_; }
    bool is_u_family() const { return u_family_; }
    bool contains(const OreElement& x) const;
    /// Membership of a degree-n coefficient.
    bool coefficient_in(const LaurentPoly& s, std::int64_t n) const;

private:
    OreRing ring_ = OreRing::T;
    bool u_family_ = false;
    std::vector<IdealComponent> components_;
};

struct GKProfile {
    enum class Kind { Polynomial, Exponential, Inconclusive };
    std::vector<Integer> dims;
    Kind kind = Kind::Inconclusive;
    /// Rounded log-log slope over the tail (Polynomial).
    int fitted_degree = 0;
    double slope = 0;
    /// Least dim_(n+1) / dim_n over the tail (Exponential).
    double base = 0;
    /// Third differences and successive ratios over the tail, plus the
    /// regression residuals of log dim against log n.
    std::vector<Integer> tail_third_differences;
    std::vector<double> tail_ratios;
    std::vector<double> residuals;
    std::size_t tail_length = 0;
    double ratio_threshold = 1.25;
    LatticePolygon polytope;
};

std::string to_string(GKProfile::Kind k);

/// dim_n = #(P + M P + ... + M^(n-1) P) lattice points for n = 1..depth.
GKProfile gk_profile(const MonomialAutomorphism& sigma, const LatticePolygon& p, int depth);
/// The triangle with vertices (0,0), (1,0), (0,1).
LatticePolygon standard_triangle();

}  // namespace oredyn
