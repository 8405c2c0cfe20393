// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "oredyn/oredyn.h"

#include "cli/report.hpp"

#include <new>
#include <string>

struct oredyn_spec {
    oredyn::InputSpec spec;
    std::string description;
};

struct oredyn_result {
    oredyn::Json doc;
    std::string compact, pretty, text;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_cap;

void clear_error() {
    last_error.clear();
    last_cap.clear();
}

oredyn_status fail(oredyn_status s, std::string msg, std::string cap = {}) {
    last_error = std::move(msg);
    last_cap = std::move(cap);
    return s;
}

oredyn::Caps resolve(const oredyn::InputSpec& spec, const oredyn_caps* caps) {
    oredyn::Caps c = spec.options.apply({});
    if (!caps) return c;
    oredyn::CapOverrides o;
    if (caps->depth) o.depth = caps->depth;
    if (caps->degree_bound) o.degree_bound = caps->degree_bound;
    if (caps->period_cap) o.period_cap = caps->period_cap;
    if (caps->torsion_bound) o.torsion_bound = caps->torsion_bound;
    return o.apply(c);
}

// Runs f, mapping exceptions to status codes.
template <class F>
oredyn_status guarded(F&& f) {
    clear_error();
    try {
        f();
        return OREDYN_OK;
    } catch (const oredyn::ResourceError& e) {
        return fail(OREDYN_RESOURCE_ERROR, e.what(), e.cap());
    } catch (const oredyn::InputError& e) {
        return fail(OREDYN_INPUT_ERROR, e.what());
    } catch (const std::bad_alloc&) {
        return fail(OREDYN_RESOURCE_ERROR, "out of memory", "memory");
    } catch (const std::exception& e) {
        return fail(OREDYN_INTERNAL_ERROR, e.what());
    }
}

}  // namespace

extern "C" {

const char* oredyn_version(void) { return "0.1.0"; }
const char* oredyn_last_error(void) { return last_error.c_str(); }
const char* oredyn_last_error_cap(void) { return last_cap.c_str(); }

size_t oredyn_command_count(void) { return oredyn::commands().size(); }

const char* oredyn_command_name(size_t index) {
    const auto& c = oredyn::commands();
    return index < c.size() ? c[index].c_str() : nullptr;
}

oredyn_status oredyn_spec_parse(const char* text, size_t length, oredyn_spec** out) {
    if (!text || !out) return fail(OREDYN_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto* s = new oredyn_spec{oredyn::parse_input(std::string_view(text, length)), {}};
        s->description = oredyn::describe(s->spec.sigma);
        *out = s;
    });
}

void oredyn_spec_free(oredyn_spec* spec) { delete spec; }

const char* oredyn_spec_describe(const oredyn_spec* spec) { return spec ? spec->description.c_str() : ""; }

oredyn_status oredyn_run(const oredyn_spec* spec, const char* command, const oredyn_caps* caps, oredyn_result** out) {
    if (!spec || !command || !out) return fail(OREDYN_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        oredyn::Caps c = resolve(spec->spec, caps);
        auto result = oredyn::run_command(command, spec->spec, c);
        *out = new oredyn_result{oredyn::make_document(command, spec->spec, c, std::move(result)), {}, {}, {}};
    });
}

oredyn_status oredyn_analyze(const char* text, size_t length, const char* command, const oredyn_caps* caps,
                             const char* source, oredyn_result** out) {
    if (!text || !command || !out) return fail(OREDYN_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    oredyn_spec* spec = nullptr;
    oredyn_status st = oredyn_spec_parse(text, length, &spec);
    if (st == OREDYN_OK) {
        st = oredyn_run(spec, command, caps, out);
        oredyn_spec_free(spec);
    }
    if (st == OREDYN_OK) return st;
    const char* kind = st == OREDYN_RESOURCE_ERROR ? "resource" : st == OREDYN_INPUT_ERROR ? "input" : "internal";
    std::string msg = last_error, cap = last_cap;
    try {
        *out = new oredyn_result{
            oredyn::make_error_document(command, source ? source : "", kind, cap, msg), {}, {}, {}};
    } catch (...) {
        *out = nullptr;
    }
    last_error = msg;
    last_cap = cap;
    return st;
}

const char* oredyn_result_json(oredyn_result* result, int pretty) {
    if (!result) return "";
    std::string& slot = pretty ? result->pretty : result->compact;
    if (slot.empty()) slot = result->doc.dump(pretty ? 2 : -1);
    return slot.c_str();
}

const char* oredyn_result_text(oredyn_result* result) {
    if (!result) return "";
    if (result->text.empty()) result->text = oredyn::render_text(result->doc);
    return result->text.c_str();
}

void oredyn_result_free(oredyn_result* result) { delete result; }

}  // extern "C"
