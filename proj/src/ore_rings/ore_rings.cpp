// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "ore_rings/ore_rings.hpp"

#include <algorithm>
#include <cmath>

namespace oredyn {

OreElement OreElement::term(const LaurentPoly& s, std::int64_t n) {
    OreElement e(s.arity());
    e.add_term(s, n);
    return e;
}

OreElement OreElement::t_power(std::size_t arity, std::int64_t n) { return term(LaurentPoly(arity, Rational(1)), n); }

LaurentPoly OreElement::coeff(std::int64_t n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? LaurentPoly(arity_) : it->second;
}

void OreElement::add_term(const LaurentPoly& s, std::int64_t n) {
    if (s.is_zero()) return;
    if (s.arity() != arity_) throw InputError("coefficient arity does not match");
    auto [it, inserted] = terms_.emplace(n, s);
    if (inserted) return;
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

OreElement& OreElement::operator+=(const OreElement& o) {
    for (const auto& [n, s] : o.terms_) add_term(s, n);
    return *this;
}

OreElement& OreElement::operator-=(const OreElement& o) {
    for (const auto& [n, s] : o.terms_) add_term(-s, n);
    return *this;
}

std::string OreElement::to_string() const {
    if (terms_.empty()) return "0";
    const auto vars = torus_variable_names(arity_);
    std::string out;
    for (const auto& [n, s] : terms_) {
        if (!out.empty()) out += " + ";
        std::string c = s.to_string(vars);
        if (n == 0) {
            out += "(" + c + ")";
            continue;
        }
        if (c != "1") out += "(" + c + ")*";
        out += n == 1 ? "t" : "t^" + std::to_string(n);
    }
    return out;
}

OreElement ore_mul(const OreElement& a, const OreElement& b, const MonomialAutomorphism& sigma) {
    if (a.arity() != b.arity() || a.arity() != sigma.arity()) throw InputError("arity mismatch in Ore product");
    std::map<std::int64_t, MonomialAutomorphism> powers;
    OreElement out(a.arity());
    for (const auto& [m, s] : a.terms()) {
        auto it = powers.find(m);
        if (it == powers.end()) it = powers.emplace(m, iterate(sigma, m)).first;
        for (const auto& [n, r] : b.terms()) out.add_term(s * it->second.apply(r), m + n);
    }
    return out;
}

SubtorusComponent subtorus(IntVector a, const Rational& value) {
    if (value == 0) throw InputError("subtorus value must be nonzero");
    if (content(a) != 1) throw InputError("direction " + to_string(a) + " is not primitive");
    IntVector n = normalize_sign(a);
    return {n, n == a ? value : Rational(1 / value)};
}

namespace {

LaurentPoly monomial_of(const IntVector& a) {
    Exponent e;
    for (const auto& x : a) e.push_back(x.get_si());
    return LaurentPoly::monomial(e);
}

std::vector<LaurentPoly> component_generators(const IdealComponent& c, std::size_t arity) {
    if (const auto* s = std::get_if<SubtorusComponent>(&c))
        return {monomial_of(s->a) - LaurentPoly(arity, s->value)};
    const auto& p = std::get<PointComponent>(c).point;
    std::vector<LaurentPoly> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p[i].is_rational()) return {};
        Rational v = p[i].order() == 2 ? Rational(-p[i].scale()) : p[i].scale();
        out.push_back(LaurentPoly::variable(arity, i) - LaurentPoly(arity, v));
    }
    return out;
}

}  // namespace

std::string to_string(const IdealComponent& c, std::size_t arity) {
    if (const auto* s = std::get_if<SubtorusComponent>(&c))
        return "{" + monomial_of(s->a).to_string(torus_variable_names(arity)) + " = " + to_string(s->value) + "}";
    return "{" + to_string(std::get<PointComponent>(c).point) + "}";
}

bool vanishes_on(const LaurentPoly& f, const IdealComponent& c) {
    if (const auto* p = std::get_if<PointComponent>(&c)) return vanishes_at(f, p->point);
    const auto& s = std::get<SubtorusComponent>(c);
    const std::size_t n = s.a.size();
    if (f.arity() != n) throw InputError("arity mismatch in membership test");
    // Coordinates x_k = u^(row k of B) with row 0 = a; then set x_0 = value.
    const IntegerMatrix binv = unimodular_inverse(unimodular_completion(s.a));
    std::map<IntVector, Rational> rest;
    for (const auto& [e, coef] : f.terms()) {
        IntVector k(n, 0);
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t i = 0; i < n; ++i) k[col] += binv(i, col) * e[i];
        IntVector tail(k.begin() + 1, k.end());
        rest[tail] += coef * pow(s.value, k[0].get_si());
    }
    return std::all_of(rest.begin(), rest.end(), [](const auto& kv) { return kv.second == 0; });
}

IdealComponent image_under(const IdealComponent& c, const MonomialAutomorphism& sigma) {
    if (const auto* s = std::get_if<SubtorusComponent>(&c))
        return subtorus(sigma.matrix() * s->a, s->value / sigma.scalar_on(s->a));
    return PointComponent{sigma.inverse().apply_to_point(std::get<PointComponent>(c).point)};
}

InvariantIdealSpec make_ideal_spec(std::vector<IdealComponent> components, const MonomialAutomorphism& sigma) {
    InvariantIdealSpec spec;
    spec.arity = sigma.arity();
    if (components.empty()) throw InputError("an ideal spec needs at least one component");
    for (auto& c : components) {
        if (auto* s = std::get_if<SubtorusComponent>(&c)) {
            if (s->a.size() != spec.arity) throw InputError("component arity does not match");
            *s = subtorus(s->a, s->value);
        } else if (std::get<PointComponent>(c).point.size() != spec.arity) {
            throw InputError("component arity does not match");
        }
        if (std::count(spec.components.begin(), spec.components.end(), c) == 0) spec.components.push_back(c);
    }
    for (const auto& c : spec.components) {
        IdealComponent img = image_under(c, sigma);
        auto it = std::find(spec.components.begin(), spec.components.end(), img);
        if (it == spec.components.end())
            throw InputError("ideal is not sigma-invariant: " + to_string(c, spec.arity) + " maps to " +
                             to_string(img, spec.arity));
        spec.permutation.push_back(static_cast<std::size_t>(it - spec.components.begin()));
    }
    std::vector<LaurentPoly> gens{LaurentPoly(spec.arity, Rational(1))};
    for (const auto& c : spec.components) {
        std::vector<LaurentPoly> next;
        for (const auto& g : gens)
            for (const auto& h : component_generators(c, spec.arity)) next.push_back(g * h);
        gens = std::move(next);
        if (gens.size() > 64) {
            gens.clear();
            break;
        }
    }
    spec.generators = std::move(gens);
    return spec;
}

PrimeCertificate is_homogeneous_prime(const InvariantIdealSpec& spec) {
    PrimeCertificate cert;
    std::vector<bool> done(spec.components.size(), false);
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t j = i; !done[j]; j = spec.permutation[j]) {
            done[j] = true;
            cycle.push_back(j);
        }
        cert.cycles.push_back(std::move(cycle));
    }
    cert.prime = cert.cycles.size() == 1;
    return cert;
}

HomogeneousIdeal HomogeneousIdeal::from_invariant(const InvariantIdealSpec& spec, OreRing ring) {
    HomogeneousIdeal h;
    h.ring_ = ring;
    h.components_ = spec.components;
    return h;
}

HomogeneousIdeal HomogeneousIdeal::u_family(const IdealComponent& j, std::size_t arity) {
    HomogeneousIdeal h;
    h.ring_ = OreRing::U;
    h.u_family_ = true;
    if (const auto* s = std::get_if<SubtorusComponent>(&j)) {
        if (s->a.size() != arity) throw InputError("component arity does not match");
        h.components_ = {subtorus(s->a, s->value)};
    } else {
        h.components_ = {j};
    }
    return h;
}

bool HomogeneousIdeal::coefficient_in(const LaurentPoly& s, std::int64_t n) const {
    if (ring_ == OreRing::U && n < 0) return false;
    if (u_family_ && n > 0) return true;
    return std::all_of(components_.begin(), components_.end(), [&](const auto& c) { return vanishes_on(s, c); });
}

bool HomogeneousIdeal::contains(const OreElement& x) const {
    if (ring_ == OreRing::U && !x.in_skew_polynomial_ring()) return false;
    return std::all_of(x.terms().begin(), x.terms().end(),
                       [&](const auto& kv) { return coefficient_in(kv.second, kv.first); });
}

std::string to_string(GKProfile::Kind k) {
    switch (k) {
        case GKProfile::Kind::Polynomial: return "polynomial";
        case GKProfile::Kind::Exponential: return "exponential";
        case GKProfile::Kind::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

LatticePolygon standard_triangle() { return LatticePolygon::from_vertices({{0, 0}, {1, 0}, {0, 1}}); }

namespace {

Integer count_points(const LatticePolygon& p) {
    Integer a = p.double_area();
    if (a == 0) return lattice_point_count(p);
    // Pick: 2A = 2I + B - 2.
    return (a + p.boundary_points() + 2) / 2;
}

}  // namespace

GKProfile gk_profile(const MonomialAutomorphism& sigma, const LatticePolygon& p, int depth) {
    if (sigma.arity() != 2) throw InputError("GK profiles are computed on the 2-torus only");
    if (depth < 1) throw InputError("profile depth must be at least 1");
    std::vector<LatticePoint> with_origin = p.vertices();
    with_origin.push_back({0, 0});
    if (!(LatticePolygon::hull_of(with_origin) == p)) throw InputError("generator polygon must contain the origin");

    GKProfile out;
    out.polytope = p;
    LatticePolygon sum = p;
    IntegerMatrix mk = sigma.matrix();
    out.dims.push_back(count_points(sum));
    for (int n = 2; n <= depth; ++n) {
        sum = minkowski_sum(sum, p.transformed(mk));
        mk = mk * sigma.matrix();
        out.dims.push_back(count_points(sum));
    }

    const std::size_t N = out.dims.size();
    out.tail_length = (N + 2) / 3;
    auto as_double = [](const Integer& z) { return z.get_d(); };
    for (std::size_t i = N - std::min(N - 1, out.tail_length); i < N; ++i)
        out.tail_ratios.push_back(as_double(out.dims[i]) / as_double(out.dims[i - 1]));

    std::vector<Integer> d3;
    for (std::size_t i = 0; i + 3 < N; ++i)
        d3.push_back(out.dims[i + 3] - 3 * out.dims[i + 2] + 3 * out.dims[i + 1] - out.dims[i]);
    bool band = false;
    if (d3.size() >= 2 * out.tail_length) {
        Integer tail_max = 0, prev_max = 0;
        for (std::size_t i = 0; i < out.tail_length; ++i) {
            const Integer& t = d3[d3.size() - 1 - i];
            const Integer& q = d3[d3.size() - 1 - out.tail_length - i];
            tail_max = std::max(tail_max, Integer(abs(t)));
            prev_max = std::max(prev_max, Integer(abs(q)));
            out.tail_third_differences.insert(out.tail_third_differences.begin(), t);
        }
        band = tail_max <= 2 * prev_max + 8;
    }

    // Least-squares slope of log dim against log n over the last half.
    const std::size_t start = N / 2;
    std::vector<double> xs, ys;
    for (std::size_t i = start; i < N; ++i) {
        xs.push_back(std::log(static_cast<double>(i + 1)));
        ys.push_back(std::log(as_double(out.dims[i])));
    }
    if (xs.size() >= 2) {
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double sxy = 0, sxx = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        out.slope = sxy / sxx;
        for (std::size_t i = 0; i < xs.size(); ++i) out.residuals.push_back(ys[i] - (my + out.slope * (xs[i] - mx)));
    }

    const bool ratios_high = !out.tail_ratios.empty() &&
                             std::all_of(out.tail_ratios.begin(), out.tail_ratios.end(),
                                         [&](double r) { return r >= out.ratio_threshold; });
    if (band) {
        out.kind = GKProfile::Kind::Polynomial;
        out.fitted_degree = static_cast<int>(std::lround(out.slope));
    } else if (ratios_high) {
        out.kind = GKProfile::Kind::Exponential;
        out.base = *std::min_element(out.tail_ratios.begin(), out.tail_ratios.end());
    }
    return out;
}

}  // namespace oredyn
