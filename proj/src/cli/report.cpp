// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/report.hpp"

#include "cli/poly_parser.hpp"
#include "dm_engine/dm_engine.hpp"
#include "dynamics/dynamics.hpp"
#include "growth/growth.hpp"
#include "invariants/invariants.hpp"
#include "ore_rings/ore_rings.hpp"

#include <sstream>

namespace oredyn {

void Caps::validate() const {
    auto check = [](const char* cap, std::int64_t v, std::int64_t hi) {
        if (v < 1 || v > hi)
            throw ResourceError(cap, std::string(cap) + " " + std::to_string(v) + " outside [1, " +
                                         std::to_string(hi) + "]");
    };
    check("depth", depth, kMaxDepth);
    check("degree-bound", degree_bound, kMaxDegreeBound);
    check("period-cap", period_cap, kMaxPeriodCap);
    check("torsion-bound", torsion_bound, kMaxTorsionBound);
}

Caps CapOverrides::apply(Caps base) const {
    if (depth) base.depth = *depth;
    if (degree_bound) base.degree_bound = *degree_bound;
    if (period_cap) base.period_cap = *period_cap;
    if (torsion_bound) base.torsion_bound = *torsion_bound;
    return base;
}

namespace {

// ---- input ----

Rational json_rational(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<std::int64_t>())));
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    throw InputError(where + ": expected an integer or a rational string");
}

Integer json_integer(const Json& v, const std::string& where) {
    Rational q = json_rational(v, where);
    if (q.get_den() != 1) throw InputError(where + ": expected an integer");
    return q.get_num();
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(where + ": missing field \"" + key + "\"");
    return *it;
}

LaurentPoly json_poly(const Json& v, const std::vector<std::string>& vars, const std::string& where) {
    if (!v.is_string()) throw InputError(where + ": expected a polynomial string");
    try {
        return parse_polynomial(v.get<std::string>(), vars);
    } catch (const ParseError& e) {
        throw ParseError(e.position(), where + ": " + std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")));
    }
}

MonomialAutomorphism parse_monomial(const Json& in) {
    const Json& rows = field(in, "matrix", "monomial");
    if (!rows.is_array() || rows.empty()) throw InputError("matrix: expected a nonempty array of rows");
    const std::size_t n = rows.size();
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string where = "matrix[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != n) throw InputError(where + ": expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = json_integer(rows[i][j], where + "[" + std::to_string(j) + "]");
    }
    std::vector<Rational> coeffs;
    if (auto it = in.find("coeffs"); it != in.end()) {
        if (!it->is_array() || it->size() != n) throw InputError("coeffs: expected " + std::to_string(n) + " entries");
        for (std::size_t i = 0; i < n; ++i) coeffs.push_back(json_rational((*it)[i], "coeffs[" + std::to_string(i) + "]"));
    }
    return MonomialAutomorphism(std::move(m), std::move(coeffs));
}

PlaneFactor parse_factor(const Json& f, const std::string& where) {
    if (!f.is_object()) throw InputError(where + ": expected an object");
    std::string type = field(f, "type", where).get<std::string>();
    if (type == "elementary") {
        ElementaryFactor e;
        if (f.contains("alpha")) e.alpha = json_rational(f["alpha"], where + ".alpha");
        if (f.contains("beta")) e.beta = json_rational(f["beta"], where + ".beta");
        if (f.contains("gamma")) e.gamma = json_rational(f["gamma"], where + ".gamma");
        if (e.alpha == 0 || e.beta == 0) throw InputError(where + ": alpha and beta must be nonzero");
        LaurentPoly p = json_poly(field(f, "p", where), {"w"}, where + ".p");
        if (!p.is_polynomial()) throw InputError(where + ".p: negative powers are not allowed");
        std::vector<Rational> c(static_cast<std::size_t>(std::max<std::int64_t>(p.total_degree(), 0)) + 1);
        for (const auto& [ex, q] : p.terms()) c[static_cast<std::size_t>(ex[0])] = q;
        e.p = UPoly(std::move(c));
        return e;
    }
    if (type == "affine") {
        AffineFactor a;
        const Json& lin = field(f, "linear", where);
        if (!lin.is_array() || lin.size() != 2) throw InputError(where + ".linear: expected a 2x2 array");
        for (std::size_t i = 0; i < 2; ++i) {
            if (!lin[i].is_array() || lin[i].size() != 2) throw InputError(where + ".linear: expected a 2x2 array");
            for (std::size_t j = 0; j < 2; ++j) a.linear[i][j] = json_rational(lin[i][j], where + ".linear");
        }
        if (f.contains("translation")) {
            const Json& t = f["translation"];
            if (!t.is_array() || t.size() != 2) throw InputError(where + ".translation: expected two entries");
            for (std::size_t i = 0; i < 2; ++i) a.translation[i] = json_rational(t[i], where + ".translation");
        }
        if (a.det() == 0) throw InputError(where + ": singular linear part");
        return a;
    }
    throw InputError(where + ": unknown factor type \"" + type + "\"");
}

template <class T>
std::optional<T> json_cap(const Json& opts, const char* key) {
    auto it = opts.find(key);
    if (it == opts.end()) return std::nullopt;
    if (!it->is_number_integer()) throw InputError(std::string("options.") + key + ": expected an integer");
    return static_cast<T>(it->get<std::int64_t>());
}

// ---- output ----

// Search results list at most this many functions.
constexpr std::size_t kListed = 4;

Json jint(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json jvec(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(jint(x));
    return a;
}

std::vector<std::string> vars_of(const Automorphism& s) {
    return is_monomial(s) ? torus_variable_names(as_monomial(s).arity()) : plane_variable_names();
}

Json growth_json(const GrowthData& g) {
    Json out;
    AlgebraicReal rho = g.rho.is_rational() ? g.rho : g.rho.refined(Rational(1, 1000000));
    out["rho"] = rho.is_rational() ? to_string(rho.lo()) : rho.to_string();
    out["j"] = g.j;
    out["type"] = to_string(g.type());
    if (!rho.is_rational()) {
        out["rho_polynomial"] = rho.poly().to_string();
        out["rho_interval"] = {to_string(rho.lo()), to_string(rho.hi())};
    }
    out["certificate"] = to_string(g.certificate);
    if (g.cyclotomic.holds) out["quasi_unipotent_exponent"] = g.cyclotomic.k;
    if (g.j_is_lattice_proxy) out["j_is_lattice_proxy"] = true;
    if (!g.degree_sequence.empty()) out["degree_sequence"] = g.degree_sequence;
    if (!g.note.empty()) out["note"] = g.note;
    return out;
}

Json invariant_json(const RationalInvariant& r, const std::vector<std::string>& vars) {
    return Json{{"function", r.to_string(vars)}, {"period", r.period}, {"kind", to_string(r.kind)}};
}

Json orbit_json(const OrbitClassification& c, const std::vector<std::string>& vars) {
    Json out;
    out["status"] = to_string(c.status);
    out["witness"] = c.witness ? invariant_json(*c.witness, vars) : Json(nullptr);
    out["certificate"] = c.certificate;
    out["max_irreducibles"] = to_string(c.max_irreducibles);
    out["finite_members"] = c.finite_members;
    out["reason"] = c.reason;
    return out;
}

Json search_json(const InvariantSearch& s, const std::vector<std::string>& vars) {
    Json out;
    out["degree_bound"] = s.degree_bound;
    out["period"] = s.period;
    out["space_dimension"] = s.space_dimension;
    out["stable_dimension"] = s.stable_dimension;
    out["invariant_count"] = s.invariants.size();
    out["semi_invariant_count"] = s.semi_invariants.size();
    Json inv = Json::array();
    for (std::size_t i = 0; i < std::min(s.invariants.size(), kListed); ++i) inv.push_back(s.invariants[i].to_string(vars));
    out["invariants"] = inv;
    Json semi = Json::array();
    for (std::size_t i = 0; i < std::min(s.semi_invariants.size(), kListed); ++i) {
        const auto& f = s.semi_invariants[i];
        semi.push_back(Json{{"function", f.f.to_string(vars)}, {"eigenvalue", to_string(f.eigenvalue)}});
    }
    out["semi_invariants"] = semi;
    return out;
}

Json invariants_result(const Automorphism& s, const Caps& caps) {
    auto vars = vars_of(s);
    OrbitClassification c = classify_orbits(s, {caps.degree_bound, caps.period_cap});
    Json out;
    out["witness"] = c.witness ? Json(c.witness->to_string(vars)) : Json(nullptr);
    out["period"] = c.witness ? Json(c.witness->period) : Json(nullptr);
    out["kind"] = c.witness ? Json(to_string(c.witness->kind)) : Json(nullptr);
    out["status"] = to_string(c.status);
    if (is_monomial(s)) {
        const auto& m = as_monomial(s);
        Json lattices = Json::array();
        for (std::int64_t k = 1; k <= caps.period_cap; ++k) {
            auto im = invariant_monomials(m, k);
            if (!im.has_invariant()) continue;
            Json basis = Json::array();
            for (const auto& a : im.invariant_lattice) basis.push_back(jvec(a));
            Json fns = Json::array();
            for (const auto& f : im.invariants()) fns.push_back(f.to_string(vars));
            lattices.push_back(Json{{"period", k}, {"lattice", basis}, {"monomials", fns}});
        }
        out["monomial_invariants"] = lattices;
    } else {
        const auto& p = as_plane(s);
        if (classify_plane(p).kind == PlaneClassification::Kind::Elementary) {
            auto fr = invariant_fibration(p);
            Json fib;
            fib["has_rational_form"] = fr.has_rational_form;
            if (fr.has_rational_form) {
                fib["h"] = fr.h.to_string(vars);
                fib["beta"] = to_string(fr.beta);
                fib["gamma"] = to_string(fr.gamma);
                fib["base_order"] = fr.base_order;
                Json inv = Json::array();
                for (const auto& r : fr.invariants) inv.push_back(invariant_json(r, vars));
                fib["invariants"] = inv;
            }
            out["fibration"] = fib;
        }
    }
    std::int64_t m = c.witness ? c.witness->period : 1;
    out["search"] = search_json(bounded_invariant_search(s, caps.degree_bound, m), vars);
    return out;
}

Json periodic_result(const Automorphism& s, const Caps& caps) {
    Json out;
    Json blocks = Json::array();
    if (is_monomial(s)) {
        const auto& m = as_monomial(s);
        out["torsion_bound"] = caps.torsion_bound;
        for (std::int64_t n = 1; n <= caps.period_cap; ++n) {
            auto pp = periodic_points(m, n, caps.torsion_bound);
            Json pts = Json::array();
            for (const auto& p : pp.points)
                if (p.exact_period == n) pts.push_back(to_string(p.point));
            Json b{{"period", n}, {"fixed_by_power", pp.points.size()}, {"exact_period_points", pts}};
            if (auto cnt = torsion_periodic_count(m, n, caps.torsion_bound)) b["smith_count"] = jint(*cnt);
            blocks.push_back(b);
        }
        out["periodic_points"] = blocks;
        if (m.arity() == 2) {
            auto pd = periodic_divisors(m, caps.period_cap);
            Json d;
            d["bound"] = pd.bound;
            Json dirs = Json::array();
            for (const auto& x : pd.directions)
                dirs.push_back(Json{{"direction", jvec(x.a)},
                                    {"period", x.period},
                                    {"sign", x.sign},
                                    {"return_time", x.return_time},
                                    {"scalar", to_string(x.scalar)},
                                    {"family_periodic", x.family_periodic}});
            d["directions"] = dirs;
            d["all_directions"] = pd.all_directions;
            if (pd.all_directions) d["all_period"] = pd.all_period;
            d["infinitely_many"] = pd.infinitely_many;
            out["periodic_divisors"] = d;
        }
        return out;
    }
    const auto& p = as_plane(s);
    Json stopped;
    for (std::int64_t n = 1; n <= caps.period_cap; ++n) {
        PlanePeriodicPoints pp;
        try {
            pp = periodic_points(p, n);
        } catch (const ResourceError& e) {
            stopped = Json{{"period", n}, {"cap", e.cap()}, {"message", e.what()}};
            break;
        }
        Json b;
        b["period"] = n;
        b["positive_dimensional"] = pp.positive_dimensional;
        if (!pp.positive_dimensional) {
            b["eliminated"] = std::string(1, pp.eliminated);
            b["eliminant"] = pp.eliminant.to_string(pp.eliminated == 'w' ? "z" : "w");
            b["count"] = pp.count;
            b["lower_period_count"] = pp.lower_period_count;
            b["exact_period_count"] = pp.count - pp.lower_period_count;
            Json pts = Json::array();
            for (const auto& [pt, per] : pp.rational_points) pts.push_back(Json{{"point", to_string(pt)}, {"exact_period", per}});
            b["rational_points"] = pts;
        }
        blocks.push_back(b);
    }
    out["periodic_points"] = blocks;
    if (!stopped.is_null()) out["stopped"] = stopped;
    return out;
}

Json gk_result(const Automorphism& s, const Caps& caps) {
    if (!is_monomial(s)) throw InputError("gk: the profiler needs a monomial map");
    auto prof = gk_profile(as_monomial(s), standard_triangle(), caps.depth);
    Json out;
    out["polytope"] = "standard triangle";
    Json dims = Json::array();
    for (const auto& d : prof.dims) dims.push_back(jint(d));
    out["dims"] = dims;
    out["kind"] = to_string(prof.kind);
    if (prof.kind == GKProfile::Kind::Polynomial) out["fitted_degree"] = prof.fitted_degree;
    if (prof.kind == GKProfile::Kind::Exponential) out["base"] = prof.base;
    out["slope"] = prof.slope;
    out["tail_length"] = prof.tail_length;
    out["ratio_threshold"] = prof.ratio_threshold;
    return out;
}

Json verdict_json(Verdict v, const DMReport& r, const char* key) {
    Json out{{"verdict", to_string(v)}};
    if (auto it = r.unknown_reasons.find(key); it != r.unknown_reasons.end()) out["reason"] = it->second;
    return out;
}

Json dm_json(const DMReport& r, const std::vector<std::string>& vars) {
    Json out;
    out["header"] = DMReport::kHeader;
    out["ring"] = r.ring == OreRing::T ? "T" : "U";
    out["family"] = r.family;
    out["sigma"] = r.sigma;
    out["growth_type"] = to_string(r.growth.type());
    out["orbit_class"] = orbit_json(r.orbits, vars);
    out["zero_primitive"] = verdict_json(r.primitive, r, "primitive");
    out["zero_locally_closed"] = verdict_json(r.locally_closed, r, "locally_closed");
    out["zero_rational"] = verdict_json(r.rational, r, "rational");
    Json dm{{"verdict", to_string(r.dm)}};
    if (!r.dm_break.empty()) dm["break"] = r.dm_break;
    if (auto it = r.unknown_reasons.find("dm"); it != r.unknown_reasons.end()) dm["reason"] = it->second;
    out["dm_verdict"] = dm;
    Json trace = Json::array();
    for (const auto& t : r.trace) {
        Json inputs = Json::object();
        for (const auto& [k, v] : t.inputs) inputs[k] = v;
        trace.push_back(Json{{"rule", t.rule}, {"citation", t.statement}, {"inputs", inputs},
                             {"conclusion", Json{{t.field, t.value}}}});
    }
    out["rule_trace"] = trace;
    if (r.registry) {
        Json facts = Json::object();
        for (const auto& [k, v] : r.registry->facts) facts[k] = v;
        out["registry"] = Json{{"name", r.registry->name}, {"tag", "cited"}, {"citation", r.registry->citation}, {"facts", facts}};
    } else {
        out["registry"] = nullptr;
    }
    out["registry_alarms"] = r.registry_alarms;
    out["replay_ok"] = replay_rule_trace(r);
    return out;
}

void render(std::ostringstream& os, const Json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) {
            if (x.is_structured() && !x.empty()) {
                os << pad << k << ":\n";
                render(os, x, indent + 1);
            } else {
                os << pad << k << ": " << (x.is_structured() ? "(none)" : scalar(x)) << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& x : v) {
            if (x.is_structured()) {
                os << pad << "-\n";
                render(os, x, indent + 1);
            } else {
                os << pad << "- " << scalar(x) << "\n";
            }
        }
    } else {
        os << pad << scalar(v) << "\n";
    }
}

}  // namespace

InputSpec parse_input(std::string_view text) {
    Json in;
    try {
        in = Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        std::string msg = e.what();
        throw ParseError(at, "malformed JSON: " + msg.substr(msg.find(':') + 2));
    }
    if (!in.is_object()) throw InputError("input must be a JSON object");
    InputSpec spec;
    const Json& fam = field(in, "family", "input");
    if (!fam.is_string()) throw InputError("family: expected a string");
    spec.family = fam.get<std::string>();
    if (auto it = in.find("name"); it != in.end() && it->is_string()) spec.name = it->get<std::string>();
    if (spec.family == "monomial") {
        spec.sigma = parse_monomial(in);
    } else if (spec.family == "plane_poly") {
        const Json& pair = field(in, "pair", "plane_poly");
        if (!pair.is_array() || pair.size() != 2) throw InputError("pair: expected two polynomial strings");
        LaurentPoly f = json_poly(pair[0], plane_variable_names(), "pair[0]");
        LaurentPoly g = json_poly(pair[1], plane_variable_names(), "pair[1]");
        if (!f.is_polynomial() || !g.is_polynomial()) throw InputError("pair: negative powers are not allowed");
        spec.sigma = PlaneAutomorphism::from_pair({f, g});
    } else if (spec.family == "plane_word") {
        const Json& word = field(in, "word", "plane_word");
        if (!word.is_array()) throw InputError("word: expected an array of factors");
        std::vector<PlaneFactor> factors;
        for (std::size_t i = 0; i < word.size(); ++i) factors.push_back(parse_factor(word[i], "word[" + std::to_string(i) + "]"));
        spec.sigma = PlaneAutomorphism::from_word(std::move(factors));
    } else {
        throw InputError("family: expected \"monomial\", \"plane_word\" or \"plane_poly\", got \"" + spec.family + "\"");
    }
    if (auto it = in.find("options"); it != in.end()) {
        if (!it->is_object()) throw InputError("options: expected an object");
        spec.options.depth = json_cap<int>(*it, "depth");
        spec.options.degree_bound = json_cap<int>(*it, "degree_bound");
        spec.options.period_cap = json_cap<std::int64_t>(*it, "period_cap");
        spec.options.torsion_bound = json_cap<std::int64_t>(*it, "torsion_bound");
    }
    return spec;
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"growth", "invariants", "orbits", "periodic", "gk", "analyze-t", "analyze-u", "report"};
    return c;
}

Json run_command(const std::string& command, const InputSpec& spec, const Caps& caps) {
    caps.validate();
    const Automorphism& s = spec.sigma;
    const auto vars = vars_of(s);
    DMOptions dm_opts;
    dm_opts.orbits = {caps.degree_bound, caps.period_cap};
    if (command == "growth") return growth_json(growth_data(s));
    if (command == "invariants") return invariants_result(s, caps);
    if (command == "orbits") return orbit_json(classify_orbits(s, dm_opts.orbits), vars);
    if (command == "periodic") return periodic_result(s, caps);
    if (command == "gk") return gk_result(s, caps);
    if (command == "analyze-t") return dm_json(analyze_T(s, dm_opts), vars);
    if (command == "analyze-u") return dm_json(analyze_U(s, dm_opts), vars);
    if (command == "report") {
        Json out;
        out["header"] = DMReport::kHeader;
        out["growth"] = growth_json(growth_data(s));
        out["T"] = dm_json(analyze_T(s, dm_opts), vars);
        out["U"] = dm_json(analyze_U(s, dm_opts), vars);
        return out;
    }
    throw InputError("unknown command \"" + command + "\"");
}

Json make_document(const std::string& command, const InputSpec& spec, const Caps& caps, Json result) {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["input"] = Json{{"name", spec.name}, {"family", spec.family}, {"sigma", describe(spec.sigma)}};
    doc["caps"] = Json{{"depth", caps.depth},
                       {"degree_bound", caps.degree_bound},
                       {"period_cap", caps.period_cap},
                       {"torsion_bound", caps.torsion_bound}};
    doc["result"] = std::move(result);
    return doc;
}

Json make_error_document(const std::string& command, const std::string& source, const std::string& kind,
                         const std::string& cap, const std::string& message) {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["source"] = source;
    Json err{{"kind", kind}};
    if (!cap.empty()) err["cap"] = cap;
    err["message"] = message;
    doc["error"] = err;
    return doc;
}

std::string render_text(const Json& document) {
    std::ostringstream os;
    render(os, document, 0);
    return os.str();
}

}  // namespace oredyn
