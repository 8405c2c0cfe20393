// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "exact/laurent.hpp"
#include "exact/upoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace oredyn {

/// (z, w) -> (alpha z + p(w), beta w + gamma).
struct ElementaryFactor {
    Rational alpha = 1, beta = 1, gamma = 0;
    UPoly p;

    int degree() const { return std::max(1, p.degree()); }
    friend bool operator==(const ElementaryFactor&, const ElementaryFactor&) = default;
};

/// (z, w) -> linear * (z, w) + translation.
struct AffineFactor {
    std::array<std::array<Rational, 2>, 2> linear{{{1, 0}, {0, 1}}};
    std::array<Rational, 2> translation{0, 0};

    Rational det() const { return linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0]; }
    /// Second coordinate depends on w only, i.e. also an elementary map.
    bool is_triangular() const { return linear[1][0] == 0; }
    friend bool operator==(const AffineFactor&, const AffineFactor&) = default;
};

using PlaneFactor = std::variant<ElementaryFactor, AffineFactor>;

/// A polynomial map of the plane as its two coordinate polynomials in z, w.
struct PolyPair {
    LaurentPoly f, g;
    int degree() const { return static_cast<int>(std::max(f.total_degree(), g.total_degree())); }
    friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

PolyPair identity_pair();
/// (a o b)(z, w) = a(b(z, w)).
PolyPair compose_pairs(const PolyPair& a, const PolyPair& b);
PolyPair factor_pair(const PlaneFactor& f);
PlaneFactor invert_factor(const PlaneFactor& f);
std::string to_string(const PlaneFactor& f);
std::string to_string(const PolyPair& p);

/// Jacobian determinant f_z g_w - f_w g_z.
LaurentPoly jacobian(const PolyPair& p);

/// A plane polynomial automorphism held as a word of generators. The word
/// [F1, ..., Fk] is the point map F1 o F2 o ... o Fk (Fk applied first), and
/// the cached pair is its coordinate expression. Functions h are acted on by
/// pullback, h -> h o sigma.
class PlaneAutomorphism {
public:
    PlaneAutomorphism() : pair_(identity_pair()) {}
    static PlaneAutomorphism from_word(std::vector<PlaneFactor> word);
    /// Decomposes the pair; throws InputError for non-automorphisms.
    static PlaneAutomorphism from_pair(const PolyPair& pair);

    const std::vector<PlaneFactor>& word() const { return word_; }
    const PolyPair& pair() const { return pair_; }
    int degree() const { return pair_.degree(); }

    PlaneAutomorphism inverse() const;
    std::array<Rational, 2> apply_to_point(const std::array<Rational, 2>& p) const;
    /// h o sigma.
    LaurentPoly pullback(const LaurentPoly& h) const;

    std::string to_string() const { return oredyn::to_string(pair_); }

private:
    std::vector<PlaneFactor> word_;
    PolyPair pair_;
};

/// Point-map composition a o b (word concatenation).
PlaneAutomorphism compose(const PlaneAutomorphism& a, const PlaneAutomorphism& b);
PlaneAutomorphism iterate(const PlaneAutomorphism& a, std::int64_t n);

/// Word of generators composing exactly to the pair, by repeated cancellation
/// of top-degree parts. Throws InputError with a diagnostic when the pair is
/// not an automorphism.
std::vector<PlaneFactor> jung_van_der_kulk(const PolyPair& pair);

/// Merges adjacent factors of the same kind, absorbs triangular affine maps
/// into elementary neighbours and turns elementary factors of degree <= 1
/// into affine ones. The composed map is unchanged.
std::vector<PlaneFactor> normalize_word(std::vector<PlaneFactor> word);

struct PlaneClassification {
    enum class Kind { Elementary, Henon } kind = Kind::Elementary;
    /// Cyclically reduced word and conjugator: sigma = theta o reduced o theta^-1.
    std::vector<PlaneFactor> reduced;
    std::vector<PlaneFactor> theta;
    /// For Kind::Elementary: an elementary tau with sigma = theta_e o tau o theta_e^-1
    /// when one exists over Q (affine parts need a rational eigenvector).
    std::optional<ElementaryFactor> elementary_form;
    std::vector<PlaneFactor> elementary_conjugator;
    /// Product of elementary degrees of the reduced word (Henon), 1 otherwise.
    Integer dynamical_degree = 1;
};

PlaneClassification classify_plane(const PlaneAutomorphism& sigma);

}  // namespace oredyn
