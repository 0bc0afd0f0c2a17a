// Copyright 2026 The crdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crdd/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "crdd/catalog.h"
#include "crdd/control_csv.h"
#include "crdd/error_matrix.h"
#include "crdd/format.h"
#include "crdd/harness.h"
#include "crdd/sequence_json.h"
#include "crdd/svg_report.h"
#include "crdd/symmetry.h"

namespace crdd {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct ValidationError : std::runtime_error {
    ValidationError(const std::string &flag, const std::string &message)
        : std::runtime_error(flag + ": " + message) {
    }
};

template <typename F>
auto with_flag(const std::string &flag, F &&body) -> decltype(body()) {
    try {
        return body();
    } catch (const ValidationError &) {
        throw;
    } catch (const std::exception &ex) {
        throw ValidationError(flag, ex.what());
    }
}

std::string read_text(const std::string &flag, const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError(flag, "cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string &flag, const std::string &path) {
    std::string text = read_text(flag, path);
    return with_flag(flag, [&] { return json::parse(text); });
}

void check_output(const std::string &flag, const std::string &path, bool force) {
    if (!path.empty() && path != "-" && fs::exists(path) && !force) {
        throw ValidationError(flag, "'" + path + "' exists; pass --force to overwrite");
    }
}

void write_output(
    const std::string &flag, const std::string &path, bool force, const std::string &content, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    check_output(flag, path, force);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << content)) {
        throw ValidationError(flag, "cannot write '" + path + "'");
    }
}

struct ShapeOptions {
    std::string kind = "square";
    std::optional<double> sigma;
    double drag = 0.5;

    void add(CLI::App &app) {
        app.add_option("--shape", kind, "Pulse envelope: ideal, square, gaussian or drag")->capture_default_str();
        app.add_option("--sigma", sigma, "Gaussian width in seconds (default tau_p/4)");
        app.add_option("--drag-coefficient", drag, "DRAG quadrature weight in units of sigma")
            ->capture_default_str();
    }

    PulseShape build() const {
        ShapeKind k = with_flag("--shape", [&] { return parse_shape_kind(kind); });
        PulseShape s;
        switch (k) {
            case ShapeKind::ideal:
                s = PulseShape::ideal();
                break;
            case ShapeKind::square:
                s = PulseShape::square();
                break;
            case ShapeKind::gaussian:
                s = PulseShape::gaussian(sigma);
                break;
            case ShapeKind::drag:
                s = PulseShape::drag(drag, sigma);
                break;
        }
        with_flag(sigma ? "--sigma" : "--drag-coefficient", [&] { s.validate(); });
        return s;
    }
};

void require_positive(const std::string &flag, double v) {
    if (!(v > 0) || !std::isfinite(v)) {
        throw ValidationError(flag, "must be a positive number");
    }
}

// Phases from a catalog name or from a sequence JSON file.
std::vector<double> phases_from(const std::string &flag, const std::string &value) {
    if (fs::is_regular_file(value)) {
        json j = read_json(flag, value);
        return with_flag(flag, [&] { return sequence_from_json(j).phases(); });
    }
    return with_flag(flag, [&] { return catalog_phases(value); });
}

// A sequence or coloured schedule file. A single sequence is returned as (seq, seq).
ColoredSchedule load_schedule(const std::string &flag, const std::string &path, bool *is_pair = nullptr) {
    json j = read_json(flag, path);
    return with_flag(flag, [&] {
        bool pair = j.is_object() && j.contains("red");
        if (is_pair) {
            *is_pair = pair;
        }
        if (pair) {
            return schedule_from_json(j);
        }
        Sequence s = sequence_from_json(j);
        return ColoredSchedule{s, s};
    });
}

const Sequence &pick_color(const ColoredSchedule &s, const std::string &color) {
    if (color == "red" || color == "R") {
        return s.red;
    }
    if (color == "blue" || color == "B") {
        return s.blue;
    }
    throw ValidationError("--color", "expected red or blue, got '" + color + "'");
}

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

struct Context {
    std::ostream &out;
    std::ostream &err;
};

using Handler = std::function<int(const Context &)>;

struct Verb {
    std::string name;
    std::string description;
    std::function<Handler(CLI::App &)> setup;
};

std::string out_flag_help() {
    return "Output path ('-' or omitted writes to stdout)";
}

Handler seq_build(CLI::App &app) {
    auto name = std::make_shared<std::string>();
    auto tau_p = std::make_shared<double>(kDefaultTauP);
    auto tau_d = std::make_shared<double>(0);
    auto shape = std::make_shared<ShapeOptions>();
    auto out = std::make_shared<std::string>();
    auto force = std::make_shared<bool>(false);
    app.add_option("--name", *name, "Catalog sequence: " + [] {
        std::string s;
        for (auto n : catalog_names()) {
            s += (s.empty() ? "" : ", ") + std::string(n);
        }
        return s;
    }())->required();
    app.add_option("--tau-p", *tau_p, "Pulse window in seconds")->capture_default_str();
    app.add_option("--tau-d", *tau_d, "Delay after each pulse in seconds")->capture_default_str();
    shape->add(app);
    app.add_option("--out", *out, out_flag_help());
    app.add_flag("--force", *force, "Overwrite existing outputs");
    return [=](const Context &ctx) {
        require_positive("--tau-p", *tau_p);
        if (!(*tau_d >= 0)) {
            throw ValidationError("--tau-d", "must be non-negative");
        }
        check_output("--out", *out, *force);
        auto phases = with_flag("--name", [&] { return catalog_phases(*name); });
        std::string canon = canonical_name(*name);
        Sequence s = sim_variant(phases, *tau_p, *tau_d, shape->build(), canon);
        write_output("--out", *out, *force, dump(sequence_to_json(s)), ctx.out);
        return kExitOk;
    };
}

Handler seq_stagger(CLI::App &app) {
    auto red = std::make_shared<std::string>();
    auto blue = std::make_shared<std::string>();
    auto tau_p = std::make_shared<double>(kDefaultTauP);
    auto tau_d = std::make_shared<double>(0);
    auto mode = std::make_shared<std::string>("symmetric");
    auto shape = std::make_shared<ShapeOptions>();
    auto out = std::make_shared<std::string>();
    auto force = std::make_shared<bool>(false);
    app.add_option("--red", *red, "Red sequence: catalog name or sequence JSON file")->required();
    app.add_option("--blue", *blue, "Blue sequence (default: same as red)");
    app.add_option("--tau-p", *tau_p, "Pulse window in seconds")->capture_default_str();
    app.add_option("--tau-d", *tau_d, "Interpulse padding in seconds")->capture_default_str();
    app.add_option("--pad", *mode, "Padding mode: symmetric or asymmetric")->capture_default_str();
    shape->add(app);
    app.add_option("--out", *out, out_flag_help());
    app.add_flag("--force", *force, "Overwrite existing outputs");
    return [=](const Context &ctx) {
        require_positive("--tau-p", *tau_p);
        if (!(*tau_d >= 0)) {
            throw ValidationError("--tau-d", "must be non-negative");
        }
        check_output("--out", *out, *force);
        PadMode pm = with_flag("--pad", [&] { return parse_pad_mode(*mode); });
        auto r = phases_from("--red", *red);
        auto b = blue->empty() ? r : phases_from("--blue", *blue);
        auto matched = with_flag("--blue", [&] { return match_lengths(r, b); });
        ColoredSchedule s = staggered(matched.first, matched.second, *tau_p, *tau_d, pm, shape->build());
        write_output("--out", *out, *force, dump(schedule_to_json(s)), ctx.out);
        return kExitOk;
    };
}

Handler seq_pad(CLI::App &app) {
    auto schedule = std::make_shared<std::string>();
    auto k = std::make_shared<int>(2);
    auto mode = std::make_shared<std::string>("symmetric");
    auto out = std::make_shared<std::string>();
    auto force = std::make_shared<bool>(false);
    app.add_option("--schedule", *schedule, "Unpadded staggered schedule JSON")->required();
    app.add_option("--k", *k, "Padding factor; tau_d = (k - 1) tau_p")->capture_default_str();
    app.add_option("--mode", *mode, "symmetric (S) or asymmetric (A)")->capture_default_str();
    app.add_option("--out", *out, out_flag_help());
    app.add_flag("--force", *force, "Overwrite existing outputs");
    return [=](const Context &ctx) {
        if (*k < 1) {
            throw ValidationError("--k", "must be at least 1");
        }
        check_output("--out", *out, *force);
        PadMode pm = with_flag("--mode", [&] { return parse_pad_mode(*mode); });
        bool pair = false;
        ColoredSchedule s = load_schedule("--schedule", *schedule, &pair);
        if (!pair) {
            throw ValidationError("--schedule", "expected a coloured schedule with red and blue");
        }
        ColoredSchedule padded = with_flag("--schedule", [&] { return pad(s, (*k - 1) * s.red.tau_p_s, pm); });
        write_output("--out", *out, *force, dump(schedule_to_json(padded)), ctx.out);
        return kExitOk;
    };
}

struct AnalyzeOptions {
    std::string in;
    std::string color = "red";
    int samples = 256;
    std::string out;
    bool force = false;

    void add(CLI::App &app, bool with_color) {
        app.add_option("--in", in, "Sequence or coloured schedule JSON")->required();
        if (with_color) {
            app.add_option("--color", color, "Colour to analyse in a schedule: red or blue")->capture_default_str();
        }
        app.add_option("--samples", samples, "Integration samples per pulse window")->capture_default_str();
        app.add_option("--out", out, out_flag_help());
        app.add_flag("--force", force, "Overwrite existing outputs");
    }

    void check() const {
        if (samples < 2) {
            throw ValidationError("--samples", "must be at least 2");
        }
        check_output("--out", out, force);
    }
};

Handler analyze_trace(CLI::App &app) {
    auto opt = std::make_shared<AnalyzeOptions>();
    auto ideal = std::make_shared<bool>(false);
    opt->add(app, true);
    app.add_flag("--bang-bang", *ideal, "Replace bounded pulses by instantaneous ones at their window centres");
    return [=](const Context &ctx) {
        opt->check();
        ColoredSchedule s = load_schedule("--in", opt->in);
        const Sequence &seq = pick_color(s, opt->color);
        ControlTrace trace = with_flag("--in", [&] {
            return *ideal ? bang_bang_trace(to_ideal(seq), opt->samples) : control_trace(seq, opt->samples);
        });
        std::ostringstream csv;
        write_trace_csv(csv, trace);
        write_output("--out", opt->out, opt->force, csv.str(), ctx.out);
        return kExitOk;
    };
}

Handler analyze_chi(CLI::App &app) {
    auto opt = std::make_shared<AnalyzeOptions>();
    auto tol = std::make_shared<double>(1e-8);
    opt->add(app, false);
    app.add_option("--tol", *tol, "Pass threshold as a fraction of the cycle time")->capture_default_str();
    return [=](const Context &ctx) {
        opt->check();
        require_positive("--tol", *tol);
        bool pair = false;
        ColoredSchedule s = load_schedule("--in", opt->in, &pair);
        SuppressionReport r = with_flag("--in", [&] {
            return pair ? verify_first_order(s, opt->samples, *tol) : verify_first_order(s.red, opt->samples, *tol);
        });
        std::ostringstream csv;
        write_chi_csv(csv, r);
        write_output("--out", opt->out, opt->force, csv.str(), ctx.out);
        return kExitOk;
    };
}

Handler analyze_symmetry(CLI::App &app) {
    auto opt = std::make_shared<AnalyzeOptions>();
    auto tol = std::make_shared<double>(1e-6);
    opt->add(app, true);
    app.add_option("--tol", *tol, "Relative L2 residual threshold")->capture_default_str();
    return [=](const Context &ctx) {
        opt->check();
        require_positive("--tol", *tol);
        ColoredSchedule s = load_schedule("--in", opt->in);
        const Sequence &seq = pick_color(s, opt->color);
        auto entries = with_flag("--in", [&] { return classify_all(control_trace(seq, opt->samples), *tol); });
        std::ostringstream csv;
        write_symmetry_csv(csv, entries);
        write_output("--out", opt->out, opt->force, csv.str(), ctx.out);
        return kExitOk;
    };
}

Handler verify(CLI::App &app) {
    auto schedule = std::make_shared<std::string>();
    auto samples = std::make_shared<int>(256);
    auto tol = std::make_shared<double>(1e-8);
    auto out = std::make_shared<std::string>();
    auto force = std::make_shared<bool>(false);
    app.add_option("--schedule", *schedule, "Sequence or coloured schedule JSON")->required();
    app.add_option("--samples", *samples, "Integration samples per pulse window")->capture_default_str();
    app.add_option("--tol", *tol, "Pass threshold as a fraction of the cycle time")->capture_default_str();
    app.add_option("--out", *out, "Chi CSV path (default: stdout after the verdict line)");
    app.add_flag("--force", *force, "Overwrite existing outputs");
    return [=](const Context &ctx) {
        if (*samples < 2) {
            throw ValidationError("--samples", "must be at least 2");
        }
        require_positive("--tol", *tol);
        check_output("--out", *out, *force);
        bool pair = false;
        ColoredSchedule s = load_schedule("--schedule", *schedule, &pair);
        SuppressionReport r = with_flag("--schedule", [&] {
            return pair ? verify_first_order(s, *samples, *tol) : verify_first_order(s.red, *samples, *tol);
        });
        ctx.out << (r.passed() ? "PASS" : "FAIL") << " max_chi2/tau_c=" << format_double(r.chi2.chi.max_abs() / r.duration)
                << " tol=" << format_double(*tol) << "\n";
        std::ostringstream csv;
        write_chi_csv(csv, r);
        write_output("--out", *out, *force, csv.str(), ctx.out);
        return r.passed() ? kExitOk : kExitFail;
    };
}

// Inlines "schedule_file" entries of plan methods, resolved against the plan's directory.
void inline_schedule_files(json &plan, const fs::path &base) {
    if (!plan.contains("methods") || !plan["methods"].is_array()) {
        return;
    }
    for (auto &m : plan["methods"]) {
        if (m.is_object() && m.contains("schedule_file")) {
            fs::path p = m["schedule_file"].get<std::string>();
            if (p.is_relative()) {
                p = base / p;
            }
            m["schedule"] = read_json("--plan", p.string());
            m.erase("schedule_file");
        }
    }
}

Handler sim_run(CLI::App &app) {
    auto plan_path = std::make_shared<std::string>();
    auto seed = std::make_shared<uint64_t>(0);
    auto threads = std::make_shared<std::optional<int>>();
    auto shots = std::make_shared<std::optional<long>>();
    auto out = std::make_shared<std::string>();
    auto force = std::make_shared<bool>(false);
    app.add_option("--plan", *plan_path, "Experiment plan JSON")->required();
    app.add_option("--seed", *seed, "Master seed (overrides the plan)")->required();
    app.add_option("--threads", *threads, "Worker threads (default: plan value)");
    app.add_option("--shots", *shots, "Shots per point (default: plan value)");
    app.add_option("--out", *out, "Results CSV")->required();
    app.add_flag("--force", *force, "Overwrite existing outputs");
    return [=](const Context &ctx) {
        check_output("--out", *out, *force);
        json j = read_json("--plan", *plan_path);
        with_flag("--plan", [&] { inline_schedule_files(j, fs::path(*plan_path).parent_path()); });
        ExperimentPlan plan = with_flag("--plan", [&] { return plan_from_json(j); });
        plan.seed = *seed;
        if (*threads) {
            if (**threads < 0) {
                throw ValidationError("--threads", "must be non-negative");
            }
            plan.threads = **threads;
        }
        if (*shots) {
            if (**shots < 1) {
                throw ValidationError("--shots", "must be at least 1");
            }
            plan.shots = **shots;
        }
        with_flag("--plan", [&] { plan.validate(); });

        // Rows are appended as cells finish; the final file is rewritten in canonical order.
        std::string partial = *out + ".partial";
        std::ofstream appender(partial, std::ios::binary | std::ios::trunc);
        if (!appender) {
            throw ValidationError("--out", "cannot write '" + partial + "'");
        }
        appender << "method,embedding_id,state_id,duration_s,pulses,shots,zeros,p0\n";
        RunHooks hooks;
        hooks.on_record = [&](const SurvivalRecord &r) {
            Dataset one;
            one.records.push_back(r);
            std::ostringstream rows;
            write_results_csv(rows, one);
            std::string text = rows.str();
            appender << text.substr(text.find('\n') + 1);
            appender.flush();
        };
        hooks.on_failure = [&](const CellFailure &f) {
            ctx.err << "cell failed: " << f.method << " " << f.embedding_id << " " << f.state_id << ": " << f.message
                    << "\n";
        };
        Dataset data = run_experiment(plan, hooks);
        appender.close();
        std::ostringstream csv;
        write_results_csv(csv, data);
        write_output("--out", *out, true, csv.str(), ctx.out);
        fs::remove(partial);
        ctx.err << "wrote " << data.row_count() << " rows, " << data.failures.size() << " failed cells\n";
        return kExitOk;
    };
}

Dataset load_results(const std::string &flag, const std::string &path) {
    std::istringstream in(read_text(flag, path));
    return with_flag(flag, [&] { return read_results_csv(in); });
}

Handler fit(CLI::App &app) {
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto force = std::make_shared<bool>(false);
    app.add_option("--in", *in, "Results CSV")->required();
    app.add_option("--out", *out, out_flag_help());
    app.add_flag("--force", *force, "Overwrite existing outputs");
    return [=](const Context &ctx) {
        check_output("--out", *out, *force);
        Dataset data = load_results("--in", *in);
        auto fits = fit_embeddings(data);
        std::ostringstream csv;
        write_fits_csv(csv, fits);
        write_output("--out", *out, *force, csv.str(), ctx.out);
        return kExitOk;
    };
}

std::vector<EmbeddingFit> fits_from(const std::string &in, const std::string &fits_path) {
    if (!fits_path.empty()) {
        std::istringstream s(read_text("--fits", fits_path));
        return with_flag("--fits", [&] { return read_fits_csv(s); });
    }
    if (in.empty()) {
        throw ValidationError("--in", "either --in or --fits is required");
    }
    return fit_embeddings(load_results("--in", in));
}

Handler summarize_verb(CLI::App &app) {
    auto in = std::make_shared<std::string>();
    auto fits_path = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto force = std::make_shared<bool>(false);
    app.add_option("--in", *in, "Results CSV (fitted on the fly)");
    app.add_option("--fits", *fits_path, "Fits CSV (takes precedence over --in)");
    app.add_option("--out", *out, out_flag_help());
    app.add_flag("--force", *force, "Overwrite existing outputs");
    return [=](const Context &ctx) {
        check_output("--out", *out, *force);
        auto fits = fits_from(*in, *fits_path);
        auto rows = with_flag(fits_path->empty() ? "--in" : "--fits", [&] { return summarize(fits); });
        std::ostringstream csv;
        write_summary_csv(csv, rows);
        write_output("--out", *out, *force, csv.str(), ctx.out);
        return kExitOk;
    };
}

Handler report(CLI::App &app) {
    auto in = std::make_shared<std::string>();
    auto fits_path = std::make_shared<std::string>();
    auto out_dir = std::make_shared<std::string>();
    auto log_y = std::make_shared<bool>(false);
    auto force = std::make_shared<bool>(false);
    app.add_option("--in", *in, "Results CSV")->required();
    app.add_option("--fits", *fits_path, "Fits CSV (default: fitted from --in)");
    app.add_option("--out-dir", *out_dir, "Directory for survival.svg and tau_box.svg")->required();
    app.add_flag("--log-y", *log_y, "Logarithmic y axes");
    app.add_flag("--force", *force, "Overwrite existing outputs");
    return [=](const Context &ctx) {
        fs::path dir(*out_dir);
        std::string survival = (dir / "survival.svg").string();
        std::string box = (dir / "tau_box.svg").string();
        check_output("--out-dir", survival, *force);
        check_output("--out-dir", box, *force);
        Dataset data = load_results("--in", *in);
        auto fits = fits_path->empty() ? fit_embeddings(data) : fits_from("", *fits_path);
        std::string a = render_line_plot(survival_plot(data, *log_y));
        std::string b = render_box_plot(tau_box_plot(fits, *log_y));
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) {
            throw ValidationError("--out-dir", "cannot create '" + *out_dir + "'");
        }
        write_output("--out-dir", survival, *force, a, ctx.out);
        write_output("--out-dir", box, *force, b, ctx.out);
        return kExitOk;
    };
}

const std::vector<Verb> &verbs() {
    static const std::vector<Verb> v = {
        {"seq build", "Build a catalog sequence with optional trailing delays", seq_build},
        {"seq stagger", "Build a staggered red/blue schedule", seq_stagger},
        {"seq pad", "Pad a staggered schedule", seq_pad},
        {"analyze trace", "Control-matrix trace CSV", analyze_trace},
        {"analyze chi", "First-order error matrices CSV", analyze_chi},
        {"analyze symmetry", "Displacement and mirror symmetry CSV", analyze_symmetry},
        {"verify", "PASS/FAIL first-order crosstalk suppression check", verify},
        {"sim run", "Run an experiment plan and write the results CSV", sim_run},
        {"fit", "Fit decay curves per method and embedding", fit},
        {"summarize", "Median characteristic times and ratio columns", summarize_verb},
        {"report", "SVG survival and characteristic-time plots", report},
    };
    return v;
}

}  // namespace

std::string usage_text() {
    std::string s = "usage: crdd <verb> [flags]\n\nverbs:\n";
    for (const auto &v : verbs()) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "  %-18s %s\n", v.name.c_str(), v.description.c_str());
        s += buf;
    }
    s += "\nRun 'crdd <verb> --help' for the flags of a verb. Every verb accepts --config FILE\n"
         "(TOML or INI keys named after the flags); flags given on the command line win.\n";
    return s;
}

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    if (args.empty()) {
        err << usage_text();
        return kExitUsage;
    }
    if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        out << usage_text();
        return kExitOk;
    }
    const Verb *verb = nullptr;
    size_t consumed = 0;
    for (const auto &v : verbs()) {
        bool two_words = v.name.find(' ') != std::string::npos;
        if (two_words && args.size() >= 2 && args[0] + " " + args[1] == v.name) {
            verb = &v;
            consumed = 2;
        } else if (!two_words && args[0] == v.name) {
            verb = &v;
            consumed = 1;
        }
    }
    if (verb == nullptr) {
        err << "unknown verb '" << args[0] << (args.size() > 1 && args[0].find('-') != 0 ? " " + args[1] : "")
            << "'\n\n"
            << usage_text();
        return kExitUsage;
    }
    CLI::App app(verb->description, "crdd " + verb->name);
    app.set_config("--config", "", "TOML or INI file with flag values; command-line flags take precedence");
    Handler handler = verb->setup(app);
    std::vector<std::string> rest(args.rbegin(), args.rend() - (long)consumed);
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitValidation;
    }
    try {
        return handler({out, err});
    } catch (const ValidationError &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitValidation;
    } catch (const std::exception &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitFail;
    }
}

}  // namespace crdd
