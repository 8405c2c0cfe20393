// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "oredyn/oredyn.h"

#include "CLI11.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
    oredyn_status status = OREDYN_OK;
    std::string output;
    std::string error;
};

enum class Format { Json, Pretty, Text };

bool read_source(const std::string& path, const std::string& stdin_text, std::string& text) {
    if (path == "-") {
        text = stdin_text;
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
}

Outcome run_one(const std::string& command, const std::string& source, const std::string& text,
                const oredyn_caps& caps, Format format) {
    Outcome o;
    oredyn_result* result = nullptr;
    o.status = oredyn_analyze(text.data(), text.size(), command.c_str(), &caps, source.c_str(), &result);
    if (o.status != OREDYN_OK) {
        o.error = source + ": " + oredyn_last_error();
        std::string cap = oredyn_last_error_cap();
        if (!cap.empty()) o.error += " (cap: " + cap + ")";
    }
    if (result) {
        o.output = format == Format::Text ? oredyn_result_text(result) : oredyn_result_json(result, format == Format::Pretty);
        oredyn_result_free(result);
    }
    return o;
}

int exit_code(oredyn_status s) {
    switch (s) {
        case OREDYN_OK: return 0;
        case OREDYN_INPUT_ERROR: return 1;
        case OREDYN_RESOURCE_ERROR: return 2;
        default: return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamics of torus and plane automorphisms and Dixmier-Moeglin verdicts for skew extensions"};
    app.set_version_flag("--version", std::string(oredyn_version()));

    std::vector<std::string> names;
    for (size_t i = 0; i < oredyn_command_count(); ++i) names.emplace_back(oredyn_command_name(i));

    std::string command;
    std::vector<std::string> inputs;
    bool json = false, pretty = false, text = false;
    oredyn_caps caps{0, 0, 0, 0};

    app.add_option("command", command, "Analysis to run")->required()->check(CLI::IsMember(names));
    app.add_option("--in", inputs, "Input file, or - for stdin (repeatable; default stdin)");
    auto* fj = app.add_flag("--json", json, "Compact JSON output (default)");
    auto* fp = app.add_flag("--pretty", pretty, "Indented JSON output");
    auto* ft = app.add_flag("--text", text, "Human-readable output");
    fj->excludes(fp)->excludes(ft);
    fp->excludes(ft);
    app.add_option("--depth", caps.depth, "GK profile depth")->check(CLI::PositiveNumber);
    app.add_option("--degree-bound", caps.degree_bound, "Degree bound for invariant searches")->check(CLI::PositiveNumber);
    app.add_option("--period-cap", caps.period_cap, "Largest period considered")->check(CLI::PositiveNumber);
    app.add_option("--torsion-bound", caps.torsion_bound, "Torsion order for periodic points")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }
    if (inputs.empty()) inputs.push_back("-");
    const Format format = text ? Format::Text : pretty ? Format::Pretty : Format::Json;

    std::string stdin_text;
    if (std::find(inputs.begin(), inputs.end(), "-") != inputs.end()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        stdin_text = ss.str();
    }

    std::vector<std::future<Outcome>> jobs;
    for (const auto& path : inputs) {
        const std::string source = path == "-" ? "<stdin>" : path;
        std::string body;
        if (!read_source(path, stdin_text, body)) {
            std::promise<Outcome> p;
            p.set_value({OREDYN_INPUT_ERROR, {}, source + ": cannot read file"});
            jobs.push_back(p.get_future());
            continue;
        }
        jobs.push_back(std::async(std::launch::async, run_one, command, source, std::move(body), caps, format));
    }

    int rc = 0;
    std::vector<std::string> outputs;
    for (auto& j : jobs) {
        Outcome o = j.get();
        if (!o.error.empty()) std::cerr << "oredyn: " << o.error << "\n";
        rc = std::max(rc, exit_code(o.status));
        if (!o.output.empty()) outputs.push_back(std::move(o.output));
    }
    if (format == Format::Text) {
        for (std::size_t i = 0; i < outputs.size(); ++i) std::cout << (i ? "\n" : "") << outputs[i];
    } else if (inputs.size() == 1) {
        for (const auto& o : outputs) std::cout << o << "\n";
    } else {
        std::cout << "[";
        for (std::size_t i = 0; i < outputs.size(); ++i) std::cout << (i ? "," : "") << outputs[i];
        std::cout << "]\n";
    }
    return rc;
}
