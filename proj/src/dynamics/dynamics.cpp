// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "dynamics/dynamics.hpp"

#include "growth/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oredyn {

std::string to_string(const PlanePoint& p) { return "(" + to_string(p[0]) + ", " + to_string(p[1]) + ")"; }

std::string to_string(OrbitStatus s) {
    switch (s) {
        case OrbitStatus::DenseOrbitExists: return "dense_orbit_exists";
        case OrbitStatus::NoDenseOrbit: return "no_dense_orbit";
        case OrbitStatus::Undecided: return "undecided";
    }
    return "unknown";
}

std::string to_string(IrreducibleCount c) {
    switch (c) {
        case IrreducibleCount::Finite: return "finite";
        case IrreducibleCount::CountablyInfinite: return "countably_infinite";
        case IrreducibleCount::Uncountable: return "uncountable";
        case IrreducibleCount::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

template <class Map, class Point>
Orbit<Point> orbit_impl(const Map& forward, const Map& backward, const Point& p, std::int64_t steps) {
    if (steps < 1) throw InputError("orbit length must be at least 1");
    Orbit<Point> out;
    std::vector<Point> back;
    Point cur = p;
    for (std::int64_t i = 0; i < steps; ++i) back.push_back(cur = backward(cur));
    out.points.assign(back.rbegin(), back.rend());
    out.points.push_back(p);
    cur = p;
    for (std::int64_t i = 1; i <= steps; ++i) {
        cur = forward(cur);
        out.points.push_back(cur);
        if (!out.period && cur == p) out.period = i;
    }
    return out;
}

}  // namespace

Orbit<TorusPoint> orbit(const MonomialAutomorphism& sigma, const TorusPoint& p, std::int64_t steps) {
    if (p.size() != sigma.arity()) throw InputError("point has the wrong number of coordinates");
    const MonomialAutomorphism inv = sigma.inverse();
    using F = std::function<TorusPoint(const TorusPoint&)>;
    F fw = [&](const TorusPoint& x) { return sigma.apply_to_point(x); };
    F bw = [&](const TorusPoint& x) { return inv.apply_to_point(x); };
    return orbit_impl(fw, bw, p, steps);
}

Orbit<PlanePoint> orbit(const PlaneAutomorphism& sigma, const PlanePoint& p, std::int64_t steps) {
    const PlaneAutomorphism inv = sigma.inverse();
    using F = std::function<PlanePoint(const PlanePoint&)>;
    F fw = [&](const PlanePoint& x) { return sigma.apply_to_point(x); };
    F bw = [&](const PlanePoint& x) { return inv.apply_to_point(x); };
    return orbit_impl(fw, bw, p, steps);
}

MonomialPeriodicPoints periodic_points(const MonomialAutomorphism& sigma, std::int64_t n, std::int64_t d,
                                       std::size_t max_points) {
    if (n < 1 || d < 1) throw InputError("period and torsion bound must be at least 1");
    const std::size_t k = sigma.arity();
    double total = std::pow(static_cast<double>(d), static_cast<double>(k));
    if (total > static_cast<double>(max_points))
        throw ResourceError("torsion-bound", std::to_string(d) + "-torsion has more than " + std::to_string(max_points) +
                                                 " points");
    MonomialPeriodicPoints out;
    out.period = n;
    out.torsion_bound = d;
    std::vector<MonomialAutomorphism> powers{MonomialAutomorphism::identity(k)};
    for (std::int64_t i = 1; i <= n; ++i) powers.push_back(compose(powers.back(), sigma));
    std::vector<std::int64_t> e(k, 0);
    while (true) {
        TorusPoint p;
        for (auto x : e) p.push_back(TorusCoord::root_of_unity(d, x));
        if (powers[static_cast<std::size_t>(n)].apply_to_point(p) == p) {
            std::int64_t exact = n;
            for (std::int64_t q = 1; q < n; ++q)
                if (n % q == 0 && powers[static_cast<std::size_t>(q)].apply_to_point(p) == p) {
                    exact = q;
                    break;
                }
            out.points.push_back({p, exact});
        }
        std::size_t i = k;
        while (i > 0 && ++e[i - 1] == d) e[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

std::optional<Integer> torsion_periodic_count(const MonomialAutomorphism& sigma, std::int64_t n, std::int64_t d) {
    MonomialAutomorphism sn = iterate(sigma, n);
    if (!sn.has_trivial_coeffs()) return std::nullopt;
    const IntegerMatrix a = sn.matrix() - IntegerMatrix::identity(sn.arity());
    std::vector<Integer> diag = smith_diagonal(a);
    Integer count = 1;
    const Integer dd = d;
    for (std::size_t i = 0; i < sn.arity(); ++i) {
        Integer s = i < diag.size() ? abs(diag[i]) : Integer(0);
        count *= s == 0 ? dd : Integer(gcd(s, dd));
    }
    return count;
}

namespace {

// f as a polynomial in variable `var` with coefficients in the other variable.
BiPoly to_bipoly(const LaurentPoly& f, std::size_t var) {
    BiPoly out;
    for (const auto& [e, c] : f.terms()) {
        auto i = static_cast<std::size_t>(e[var]);
        if (out.size() <= i) out.resize(i + 1);
        out[i] += UPoly::monomial(c, static_cast<std::size_t>(e[1 - var]));
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

// f with the non-eliminated variable set to x, as a polynomial in `var`.
UPoly specialize(const BiPoly& f, const Rational& x) {
    std::vector<Rational> c;
    for (const auto& coeff : f) c.push_back(coeff.eval(x));
    return UPoly(c);
}

struct Elimination {
    UPoly eliminant, extraneous{Rational(1)};
    bool zero = false;
};

Elimination eliminate(const LaurentPoly& F, const LaurentPoly& G, std::size_t var) {
    Elimination out;
    BiPoly a = to_bipoly(F, var), b = to_bipoly(G, var);
    out.eliminant = resultant(a, b);
    if (out.eliminant.is_zero()) {
        out.zero = true;
        return out;
    }
    UPoly h = gcd(a.back(), b.back());
    while (h.degree() >= 1) {
        UPoly g = gcd(out.eliminant, h);
        if (g.degree() < 1) break;
        out.eliminant = out.eliminant.exact_div(g);
        out.extraneous *= g;
    }
    out.eliminant = out.eliminant.monic();
    return out;
}

bool is_nonzero_constant(const LaurentPoly& f) { return !f.is_zero() && f.is_constant(); }

PlanePeriodicPoints solve_periodic(const PlaneAutomorphism& sigma, std::int64_t n) {
    PlanePeriodicPoints out;
    out.period = n;
    const PolyPair pn = iterate(sigma, n).pair();
    const LaurentPoly F = pn.f - LaurentPoly::variable(2, 0), G = pn.g - LaurentPoly::variable(2, 1);
    if (is_nonzero_constant(F) || is_nonzero_constant(G)) {
        out.eliminant = UPoly(Rational(1));
        return out;
    }
    if (F.is_zero() || G.is_zero()) {
        out.positive_dimensional = true;
        return out;
    }
    Elimination ew = eliminate(F, G, 1), ez = eliminate(F, G, 0);
    if (ew.zero || ez.zero) {
        out.positive_dimensional = true;
        return out;
    }
    const bool use_w = ew.extraneous.degree() < 1 || ez.extraneous.degree() >= 1;
    const Elimination& e = use_w ? ew : ez;
    out.eliminated = use_w ? 'w' : 'z';
    out.eliminant = e.eliminant;
    out.extraneous = e.extraneous;
    out.count = out.eliminant.degree();

    const std::size_t var = use_w ? 1 : 0;
    const BiPoly a = to_bipoly(F, var), b = to_bipoly(G, var);
    for (const Rational& x : rational_roots(out.eliminant)) {
        UPoly common = gcd(specialize(a, x), specialize(b, x));
        for (const Rational& y : rational_roots(common)) {
            PlanePoint p = use_w ? PlanePoint{x, y} : PlanePoint{y, x};
            std::int64_t exact = n;
            PlanePoint cur = p;
            for (std::int64_t q = 1; q < n; ++q) {
                cur = sigma.apply_to_point(cur);
                if (n % q == 0 && cur == p) {
                    exact = q;
                    break;
                }
            }
            out.rational_points.push_back({p, exact});
        }
    }
    std::sort(out.rational_points.begin(), out.rational_points.end());
    return out;
}

int word_degree(const PlaneAutomorphism& sigma) {
    int d = 1;
    for (const auto& f : sigma.word())
        if (const auto* e = std::get_if<ElementaryFactor>(&f)) d *= e->degree();
    return d;
}

int mobius(std::int64_t n) {
    int r = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
    }
    return n > 1 ? -r : r;
}

}  // namespace

PlanePeriodicPoints fixed_points(const PlaneAutomorphism& sigma) { return periodic_points(sigma, 1); }

PlanePeriodicPoints periodic_points(const PlaneAutomorphism& sigma, std::int64_t n, int max_degree) {
    if (n < 1) throw InputError("period must be at least 1");
    double deg = std::pow(static_cast<double>(word_degree(sigma)), static_cast<double>(n));
    if (deg > max_degree)
        throw ResourceError("period-cap", "deg(sigma)^" + std::to_string(n) + " exceeds " + std::to_string(max_degree));
    PlanePeriodicPoints out = solve_periodic(sigma, n);
    if (out.positive_dimensional || n == 1) return out;
    // Solutions of exact period q: sum over e | q of mu(q / e) count(e).
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n + 1), 0);
    for (std::int64_t q = 1; q < n; ++q) {
        if (n % q) continue;
        PlanePeriodicPoints sub = solve_periodic(sigma, q);
        if (sub.positive_dimensional) {
            out.lower_period_count = -1;
            return out;
        }
        counts[static_cast<std::size_t>(q)] = sub.count;
    }
    for (std::int64_t q = 1; q < n; ++q) {
        if (n % q) continue;
        std::int64_t exact = 0;
        for (std::int64_t e = 1; e <= q; ++e)
            if (q % e == 0) exact += mobius(q / e) * counts[static_cast<std::size_t>(e)];
        out.lower_period_count += exact;
    }
    return out;
}

PeriodicOrbitStream::PeriodicOrbitStream(Automorphism sigma, std::int64_t max_order)
    : sigma_(std::move(sigma)), max_order_(max_order) {}

std::optional<PeriodicWitness> PeriodicOrbitStream::next() {
    while (pending_.empty()) {
        if (++order_ > max_order_) return std::nullopt;
        if (!is_monomial(sigma_)) {
            if (order_ > 3) return std::nullopt;
            try {
                PlanePeriodicPoints pp = periodic_points(as_plane(sigma_), order_);
                if (pp.positive_dimensional) {
                    pending_.push_back({order_, "curve of points of period " + std::to_string(order_)});
                } else if (pp.count - pp.lower_period_count > 0) {
                    pending_.push_back({order_, std::to_string(pp.count - pp.lower_period_count) +
                                                    " points of exact period " + std::to_string(order_) + ", " +
                                                    std::string(1, pp.eliminated == 'w' ? 'z' : 'w') +
                                                    "-coordinates among the roots of " +
                                                    pp.eliminant.to_string(pp.eliminated == 'w' ? "z" : "w")});
                }
            } catch (const ResourceError&) {
                return std::nullopt;
            }
            continue;
        }
        const MonomialAutomorphism& s = as_monomial(sigma_);
        const std::size_t k = s.arity();
        const std::int64_t d = order_;
        const std::int64_t limit = 2 * static_cast<std::int64_t>(std::pow(static_cast<double>(d), static_cast<double>(k))) + 2;
        std::vector<std::int64_t> e(k, 0);
        while (true) {
            std::int64_t g = d;
            for (auto x : e) g = gcd64(g, x);
            if (g == 1) {
                TorusPoint p;
                for (auto x : e) p.push_back(TorusCoord::root_of_unity(d, x));
                if (!seen_.count(p)) {
                    std::vector<TorusPoint> orb{p};
                    TorusPoint cur = s.apply_to_point(p);
                    while (!(cur == p) && static_cast<std::int64_t>(orb.size()) < limit) {
                        orb.push_back(cur);
                        cur = s.apply_to_point(cur);
                    }
                    seen_.insert(orb.begin(), orb.end());
                    if (cur == p)
                        pending_.push_back({static_cast<std::int64_t>(orb.size()), "orbit of " + oredyn::to_string(p)});
                }
            }
            std::size_t i = k;
            while (i > 0 && ++e[i - 1] == d) e[--i] = 0;
            if (i == 0) break;
        }
    }
    PeriodicWitness w = pending_.front();
    pending_.erase(pending_.begin());
    return w;
}

namespace {

OrbitClassification classify_monomial(const MonomialAutomorphism& sigma) {
    OrbitClassification out;
    std::int64_t l = 1;
    for (auto c : quasi_unipotent_candidates(sigma.arity())) l = lcm64(l, c);
    const IntegerMatrix id = IntegerMatrix::identity(sigma.arity());
    const bool has_root_of_unity = !integer_kernel(matrix_power(sigma.matrix(), l) - id).empty();
    // Every power with a fixed exponent has it in ker(M^l - I), where the
    // scalar of sigma^(2l) is a square of a rational unit or not torsion.
    if (invariant_monomials(sigma, 2 * l).has_invariant()) {
        for (std::int64_t m = 1; m <= 2 * l; ++m) {
            InvariantMonomials inv = invariant_monomials(sigma, m);
            if (!inv.has_invariant()) continue;
            const std::size_t n = sigma.arity();
            out.status = OrbitStatus::NoDenseOrbit;
            out.witness = RationalInvariant{inv.invariants().front(), LaurentPoly(n, Rational(1)), m,
                                            WitnessKind::Monomial};
            out.max_irreducibles = IrreducibleCount::Uncountable;
            return out;
        }
    }
    out.status = OrbitStatus::DenseOrbitExists;
    bool torsion = std::all_of(sigma.coeffs().begin(), sigma.coeffs().end(),
                               [](const Rational& c) { return c == 1 || c == -1; });
    if (!has_root_of_unity) {
        out.certificate = "no eigenvalue of M is a root of unity";
        out.max_irreducibles = IrreducibleCount::CountablyInfinite;
    } else {
        out.certificate = "scalars of sigma^" + std::to_string(2 * l) + " on ker(M^" + std::to_string(l) +
                          " - I) generate no trivial character";
        if (torsion) throw std::logic_error("torsion coefficients with a fixed exponent but no invariant");
        out.max_irreducibles = IrreducibleCount::Unknown;
        out.reason = "eigenvalue 1 of a power of M with non-torsion coefficient scalars";
    }
    return out;
}

OrbitClassification classify_plane_orbits(const PlaneAutomorphism& sigma, const OrbitOptions& opt) {
    OrbitClassification out;
    PlaneClassification c = classify_plane(sigma);
    if (c.kind == PlaneClassification::Kind::Henon) {
        out.status = OrbitStatus::DenseOrbitExists;
        out.certificate = "Henon type with dynamical degree " + to_string(c.dynamical_degree);
        out.max_irreducibles = IrreducibleCount::CountablyInfinite;
        return out;
    }
    std::string base_note;
    if (c.elementary_form) {
        FibrationReport f = invariant_fibration(sigma);
        if (!f.invariants.empty()) {
            auto best = std::min_element(f.invariants.begin(), f.invariants.end(),
                                         [](const auto& a, const auto& b) { return a.period < b.period; });
            out.status = OrbitStatus::NoDenseOrbit;
            out.witness = *best;
            out.max_irreducibles = IrreducibleCount::Uncountable;
            return out;
        }
        base_note = "fibration " + f.h.to_string(plane_variable_names()) + " with base action x -> " +
                    to_string(f.beta) + "*x + " + to_string(f.gamma) + " of infinite order";
    } else {
        base_note = "no rational triangular form";
    }
    std::string limit_note;
    for (std::int64_t m = 1; m <= opt.period_cap; ++m) {
        try {
            InvariantSearch s = bounded_invariant_search(sigma, opt.degree_bound, m);
            if (s.found()) {
                out.status = OrbitStatus::NoDenseOrbit;
                out.witness = s.invariants.front();
                out.max_irreducibles = IrreducibleCount::Uncountable;
                return out;
            }
        } catch (const ResourceError& e) {
            limit_note = "; search stopped at m = " + std::to_string(m) + " (" + e.what() + ")";
            break;
        }
    }
    out.status = OrbitStatus::Undecided;
    out.reason = "elementary type: " + base_note + "; no invariant of degree <= " + std::to_string(opt.degree_bound) +
                 " for sigma^m, m <= " + std::to_string(opt.period_cap) + limit_note;
    return out;
}

}  // namespace

OrbitClassification classify_orbits(const Automorphism& sigma, const OrbitOptions& options) {
    if (is_monomial(sigma)) return classify_monomial(as_monomial(sigma));
    return classify_plane_orbits(as_plane(sigma), options);
}

}  // namespace oredyn
