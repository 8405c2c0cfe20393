// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "growth/growth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>

namespace oredyn {

namespace {

std::int64_t euler_phi(std::int64_t d) {
    std::int64_t r = d;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        r -= r / p;
    }
    if (d > 1) r -= r / d;
    return r;
}

// Largest Jordan block among the roots of q (squarefree, all roots eigenvalues of m).
int max_block_size(const IntegerMatrix& m, const UPoly& q) {
    IntegerMatrix qm = eval_at_matrix(q.primitive(), m);
    IntegerMatrix pw = qm;
    std::size_t prev = rank(pw);
    for (int r = 1; r <= static_cast<int>(m.rows()); ++r) {
        pw = pw * qm;
        std::size_t cur = rank(pw);
        if (cur == prev) return r;
        prev = cur;
    }
    return static_cast<int>(m.rows());
}

}  // namespace

std::vector<std::int64_t> quasi_unipotent_candidates(std::size_t n) {
    std::vector<std::int64_t> orders;
    for (std::int64_t d = 1; d <= static_cast<std::int64_t>(2 * n * n + 2); ++d)
        if (euler_phi(d) <= static_cast<std::int64_t>(n)) orders.push_back(d);
    std::vector<std::int64_t> out;
    std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t used,
                                                                           std::int64_t l) {
        if (l > 0) out.push_back(l);
        for (std::size_t k = i; k < orders.size(); ++k) {
            std::int64_t f = euler_phi(orders[k]);
            if (used + f <= static_cast<std::int64_t>(n)) rec(k + 1, used + f, l == 0 ? orders[k] : std::lcm(l, orders[k]));
        }
    };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

QuasiUnipotence is_quasi_unipotent(const IntegerMatrix& m) {
    QuasiUnipotence q;
    const IntegerMatrix id = IntegerMatrix::identity(m.rows());
    for (std::int64_t k : quasi_unipotent_candidates(m.rows())) {
        q.searched.push_back(k);
        int idx = nilpotency_index(matrix_power(m, k) - id);
        if (idx > 0) {
            q.holds = true;
            q.k = k;
            q.nilpotency_index = idx;
            return q;
        }
    }
    return q;
}

std::string to_string(GrowthType t) { return t == GrowthType::Finite ? "finite" : "infinite"; }

std::string to_string(GrowthData::Certificate c) {
    switch (c) {
        case GrowthData::Certificate::Cyclotomic: return "cyclotomic";
        case GrowthData::Certificate::DominantRoot: return "dominant_root";
        case GrowthData::Certificate::HenonDegree: return "henon_degree";
        case GrowthData::Certificate::ElementaryDegreeFit: return "elementary_degree_fit";
    }
    return "unknown";
}

namespace {

// h(F(t), G(t)) for univariate F, G.
UPoly restrict_to_curve(const LaurentPoly& h, const UPoly& F, const UPoly& G) {
    std::vector<UPoly> fp{UPoly(1)}, gp{UPoly(1)};
    UPoly acc;
    for (const auto& [e, c] : h.terms()) {
        while (fp.size() <= static_cast<std::size_t>(e[0])) fp.push_back(fp.back() * F);
        while (gp.size() <= static_cast<std::size_t>(e[1])) gp.push_back(gp.back() * G);
        acc += UPoly(c) * fp[static_cast<std::size_t>(e[0])] * gp[static_cast<std::size_t>(e[1])];
    }
    return acc;
}

int word_degree(const PlaneAutomorphism& sigma) {
    int d = 1;
    for (const auto& f : sigma.word())
        if (const auto* e = std::get_if<ElementaryFactor>(&f)) d *= e->degree();
    return d;
}

}  // namespace

DegreeSequence degree_sequence(const PlaneAutomorphism& sigma, int count, int max_degree) {
    // Two fixed lines; the restriction degree is a lower bound for deg(sigma^n).
    static const std::array<std::array<long, 4>, 2> lines{{{7, 2, 3, -5}, {-4, 1, 9, 2}}};
    DegreeSequence out;
    std::array<std::pair<UPoly, UPoly>, 2> cur;
    for (std::size_t i = 0; i < lines.size(); ++i)
        cur[i] = {UPoly::from_integers({lines[i][1], lines[i][0]}), UPoly::from_integers({lines[i][3], lines[i][2]})};
    const int step_bound = word_degree(sigma);
    Integer upper = 1;
    out.exact = true;
    for (int n = 1; n <= count; ++n) {
        int d = 0;
        for (auto& [F, G] : cur) {
            UPoly nf = restrict_to_curve(sigma.pair().f, F, G), ng = restrict_to_curve(sigma.pair().g, F, G);
            F = std::move(nf);
            G = std::move(ng);
            d = std::max({d, F.degree(), G.degree()});
        }
        upper *= step_bound;
        out.degrees.push_back(d);
        out.exact = out.exact && upper == d;
        if (d > max_degree) break;
    }
    return out;
}

DynamicalDegree dynamical_degree(const PlaneAutomorphism& sigma, int max_n, int max_degree) {
    DynamicalDegree d;
    PlaneClassification c = classify_plane(sigma);
    d.value = c.dynamical_degree;
    DegreeSequence seq = degree_sequence(sigma, max_n, max_degree);
    d.degrees = seq.degrees;
    d.degrees_exact = seq.exact;
    if (c.kind == PlaneClassification::Kind::Henon) {
        d.sequence_consistent = d.degrees.size() >= 2;
        for (std::size_t i = 0; i + 1 < d.degrees.size(); ++i)
            d.sequence_consistent = d.sequence_consistent && Integer(d.degrees[i + 1]) == d.value * d.degrees[i];
    } else {
        int first = d.degrees.empty() ? 0 : d.degrees.front();
        d.sequence_consistent = std::all_of(d.degrees.begin(), d.degrees.end(), [&](int x) { return x <= first * first; });
    }
    return d;
}

GrowthData growth_data(const MonomialAutomorphism& sigma) {
    const IntegerMatrix& m = sigma.matrix();
    GrowthData g;
    g.j_is_lattice_proxy = true;
    g.rho = spectral_radius(m);
    if (g.rho == Rational(1)) {
        // All roots of an integer polynomial on the unit circle are roots of unity.
        g.certificate = GrowthData::Certificate::Cyclotomic;
        g.cyclotomic = is_quasi_unipotent(m);
        if (!g.cyclotomic.holds) throw std::logic_error("spectral radius 1 without a cyclotomic certificate");
        g.j = g.cyclotomic.nilpotency_index - 1;
        return g;
    }
    g.certificate = GrowthData::Certificate::DominantRoot;
    g.cyclotomic = is_quasi_unipotent(m);
    UPoly chi = char_poly(m);
    int block = 0;
    for (const UPoly& cand : {g.rho.poly(), g.rho.poly().reflect()}) {
        UPoly q = gcd(chi, cand);
        if (q.degree() >= 1) block = std::max(block, max_block_size(m, q));
    }
    if (block == 0) {
        g.note = "dominant eigenvalues are non-real; j taken as 0";
        block = 1;
    }
    g.j = block - 1;
    return g;
}

GrowthData growth_data(const PlaneAutomorphism& sigma) {
    GrowthData g;
    PlaneClassification c = classify_plane(sigma);
    if (c.kind == PlaneClassification::Kind::Henon) {
        DynamicalDegree d = dynamical_degree(sigma);
        g.certificate = GrowthData::Certificate::HenonDegree;
        g.rho = AlgebraicReal(Rational(d.value));
        g.j = 0;
        g.degree_sequence = d.degrees;
        if (!d.sequence_consistent) g.note = "degree sequence not yet multiplicative at small n";
        return g;
    }
    g.certificate = GrowthData::Certificate::ElementaryDegreeFit;
    g.rho = AlgebraicReal(Rational(1));
    g.degree_sequence = degree_sequence(sigma, 12).degrees;
    const auto& d = g.degree_sequence;
    if (d.size() >= 12) {
        double ratio = static_cast<double>(d[11]) / std::max(1, d[5]);
        g.j = std::clamp(static_cast<int>(std::lround(std::log2(ratio))), 0, 2);
    }
    return g;
}

GrowthData growth_data(const Automorphism& sigma) {
    return std::visit([](const auto& s) { return growth_data(s); }, sigma);
}

GrowthType growth_type(const Automorphism& sigma) { return growth_data(sigma).type(); }

}  // namespace oredyn
