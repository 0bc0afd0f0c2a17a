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

#include "crdd/harness.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "crdd/catalog.h"
#include "crdd/format.h"
#include "crdd/rng.h"
#include "crdd/sequence_json.h"
#include "crdd/stats.h"

namespace crdd {

using nlohmann::json;

std::string_view method_kind_name(MethodKind k) {
    switch (k) {
        case MethodKind::idle:
            return "idle";
        case MethodKind::sim:
            return "sim";
        case MethodKind::cr:
            return "cr";
    }
    throw std::invalid_argument("unknown method kind");
}

namespace {

MethodKind parse_method_kind(const std::string &s) {
    for (MethodKind k : {MethodKind::idle, MethodKind::sim, MethodKind::cr}) {
        if (method_kind_name(k) == s) {
            return k;
        }
    }
    throw std::invalid_argument("unknown method kind '" + s + "'");
}

}  // namespace

std::string MethodSpec::pair_key() const {
    return pair.empty() ? pair_from_label(label) : pair;
}

void MethodSpec::validate() const {
    if (label.empty()) {
        throw std::invalid_argument("method label must not be empty");
    }
    if (label.find(',') != std::string::npos) {
        throw std::invalid_argument("method label must not contain commas");
    }
    if (custom.has_value()) {
        if (kind == MethodKind::idle) {
            throw std::invalid_argument("method '" + label + "': idle methods take no schedule");
        }
        custom->validate();
    } else if (kind != MethodKind::idle) {
        canonical_name(sequence);
        if (!blue.empty()) {
            canonical_name(blue);
        }
        if (k < 1) {
            throw std::invalid_argument("method '" + label + "': k must be at least 1");
        }
        shape.validate();
    }
    if ((target_pulses && *target_pulses < 1) || (stride_pulses && *stride_pulses < 1)) {
        throw std::invalid_argument("method '" + label + "': pulse targets must be positive");
    }
}

std::vector<Sequence> method_schedule(const MethodSpec &method, const DeviceModel &device) {
    double tau_p = device.tau_p_s;
    double tau_d = (method.k - 1) * tau_p;
    int n = device.num_qubits();
    if (method.custom.has_value() && method.kind != MethodKind::idle) {
        const ColoredSchedule &s = *method.custom;
        if (method.kind == MethodKind::sim) {
            return std::vector<Sequence>(n, s.red);
        }
        QubitGraph g = device.graph.coloring.has_value() ? device.graph : two_color(device.graph);
        std::vector<Sequence> out;
        for (int v = 0; v < n; ++v) {
            out.push_back((*g.coloring)[v] == Color::red ? s.red : s.blue);
        }
        return out;
    }
    if (method.kind == MethodKind::sim) {
        auto phases = catalog_phases(method.sequence);
        return std::vector<Sequence>(n, sim_variant(phases, tau_p, tau_d, method.shape, method.label));
    }
    if (method.kind == MethodKind::cr) {
        auto [red, blue] = match_lengths(
            catalog_phases(method.sequence), catalog_phases(method.blue.empty() ? method.sequence : method.blue));
        ColoredSchedule s = staggered(red, blue, tau_p, tau_d, method.pad, method.shape);
        s.red.name = method.label + "/R";
        s.blue.name = method.label + "/B";
        QubitGraph g = device.graph.coloring.has_value() ? device.graph : two_color(device.graph);
        std::vector<Sequence> out;
        for (int v = 0; v < n; ++v) {
            out.push_back((*g.coloring)[v] == Color::red ? s.red : s.blue);
        }
        return out;
    }
    throw std::invalid_argument("idle methods have no cyclic schedule");
}

MethodTiming method_timing(const MethodSpec &method, double tau_p) {
    MethodTiming t{method.label, 0, 0, method.target_pulses, method.stride_pulses, method.pair_key()};
    if (method.kind == MethodKind::idle) {
        return t;
    }
    DeviceModel one;
    one.graph.n = 1;
    one.graph.coloring = std::vector<Color>{Color::red};
    one.local_field = {std::array<double, 3>{0, 0, 0}};
    one.tau_p_s = tau_p;
    Sequence s = method_schedule(method, one)[0];
    t.pulses_per_cycle = (long)s.pulse_count();
    t.cycle_duration_s = s.duration();
    return t;
}

AlignmentError::AlignmentError(long lcm_in, long target)
    : std::invalid_argument(
          "cycle pulse counts have least common multiple " + std::to_string(lcm_in) +
          ", which exceeds the target of " + std::to_string(target) + " pulses"),
      lcm(lcm_in) {
}

std::vector<std::vector<DurationPoint>> schedule_points(
    std::span<const MethodTiming> methods, long target_pulses, std::optional<long> stride_pulses) {
    long period = 1;
    for (const auto &m : methods) {
        if (m.pulses_per_cycle > 0) {
            period = std::lcm(period, m.pulses_per_cycle);
        }
    }
    std::vector<std::vector<DurationPoint>> out(methods.size());
    for (size_t i = 0; i < methods.size(); ++i) {
        const auto &m = methods[i];
        if (m.pulses_per_cycle == 0) {
            continue;
        }
        long target = m.target_pulses.value_or(target_pulses);
        if (period > target) {
            throw AlignmentError(period, target);
        }
        long final_pulses = target / period * period;
        long stride = m.stride_pulses.value_or(stride_pulses.value_or(std::max(1L, final_pulses / 8)));
        long cycles = final_pulses / m.pulses_per_cycle;
        long step = cycles;
        for (long d = 1; d <= cycles; ++d) {
            if (cycles % d == 0 && d * m.pulses_per_cycle >= stride) {
                step = d;
                break;
            }
        }
        for (long c = 0; c <= cycles; c += step) {
            out[i].push_back({c, c * m.pulses_per_cycle, c * m.cycle_duration_s});
        }
    }
    for (size_t i = 0; i < methods.size(); ++i) {
        if (methods[i].pulses_per_cycle != 0) {
            continue;
        }
        std::vector<double> times;
        for (size_t j = 0; j < methods.size(); ++j) {
            bool partner = methods[j].pulses_per_cycle != 0 &&
                           (methods[i].pair.empty() || methods[j].pair == methods[i].pair);
            if (partner) {
                for (const auto &p : out[j]) {
                    times.push_back(p.duration_s);
                }
            }
        }
        std::sort(times.begin(), times.end());
        for (double t : times) {
            if (out[i].empty() || t - out[i].back().duration_s > 1e-9 * std::max(t, 1e-300)) {
                out[i].push_back({0, 0, t});
            }
        }
        if (out[i].empty()) {
            throw std::invalid_argument("idle method '" + methods[i].label + "' has no partner method");
        }
    }
    return out;
}

std::vector<std::vector<int>> generate_embeddings(const QubitGraph &graph, int size, int count) {
    graph.validate();
    if (size < 1 || size > graph.n) {
        throw std::invalid_argument("embedding size out of range");
    }
    auto adj = graph.adjacency();
    std::vector<std::vector<int>> paths;
    std::vector<int> cur;
    std::vector<bool> used(graph.n, false);
    std::function<void(int)> dfs = [&](int v) {
        cur.push_back(v);
        used[v] = true;
        if ((int)cur.size() == size) {
            if (size == 1 || cur.front() < cur.back()) {
                paths.push_back(cur);
            }
        } else {
            for (int w : adj[v]) {
                if (!used[w]) {
                    dfs(w);
                }
            }
        }
        used[v] = false;
        cur.pop_back();
    };
    for (int v = 0; v < graph.n; ++v) {
        dfs(v);
    }
    std::sort(paths.begin(), paths.end());
    std::vector<int> usage(graph.n, 0);
    std::vector<bool> taken(paths.size(), false);
    std::vector<std::vector<int>> out;
    while ((int)out.size() < count) {
        long best = -1;
        long best_cost = 0;
        for (size_t p = 0; p < paths.size(); ++p) {
            if (taken[p]) {
                continue;
            }
            long cost = 0;
            for (int v : paths[p]) {
                cost += usage[v];
            }
            if (best < 0 || cost < best_cost) {
                best = (long)p;
                best_cost = cost;
            }
        }
        if (best < 0) {
            break;
        }
        taken[best] = true;
        for (int v : paths[best]) {
            ++usage[v];
        }
        out.push_back(paths[best]);
    }
    return out;
}

void ExperimentPlan::validate() const {
    device.validate();
    if (embeddings.empty()) {
        throw std::invalid_argument("plan needs at least one embedding");
    }
    std::set<std::string> ids;
    for (const auto &e : embeddings) {
        if (!ids.insert(e.id).second) {
            throw std::invalid_argument("duplicate embedding id '" + e.id + "'");
        }
        if (e.id.find(',') != std::string::npos) {
            throw std::invalid_argument("embedding ids must not contain commas");
        }
        std::set<int> seen;
        for (int v : e.vertices) {
            if (v < 0 || v >= device.num_qubits() || !seen.insert(v).second) {
                throw std::invalid_argument("embedding '" + e.id + "' has an invalid vertex list");
            }
        }
        if (e.vertices.empty() || (int)e.vertices.size() > kMaxQubits) {
            throw std::invalid_argument("embedding '" + e.id + "' size is out of range");
        }
    }
    if (methods.empty()) {
        throw std::invalid_argument("plan needs at least one method");
    }
    std::set<std::string> labels;
    for (const auto &m : methods) {
        m.validate();
        if (!labels.insert(m.label).second) {
            throw std::invalid_argument("duplicate method label '" + m.label + "'");
        }
    }
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    if (samples_per_pulse < 16) {
        throw std::invalid_argument("samples_per_pulse must be at least 16");
    }
    if (target_pulses < 1) {
        throw std::invalid_argument("target_pulses must be positive");
    }
    if (type1_states < 0 || type1_states > 6 || type2_states < 0) {
        throw std::invalid_argument("state counts out of range");
    }
}

json plan_to_json(const ExperimentPlan &plan) {
    json methods = json::array();
    for (const auto &m : plan.methods) {
        json j{{"label", m.label}, {"kind", std::string(method_kind_name(m.kind))}};
        if (m.custom.has_value()) {
            j["schedule"] = schedule_to_json(*m.custom);
        } else if (m.kind != MethodKind::idle) {
            j["sequence"] = m.sequence;
            if (!m.blue.empty()) {
                j["blue"] = m.blue;
            }
            j["k"] = m.k;
            j["pad"] = std::string(pad_mode_name(m.pad));
            j["shape"] = shape_to_json(m.shape);
        }
        if (m.target_pulses) {
            j["target_pulses"] = *m.target_pulses;
        }
        if (m.stride_pulses) {
            j["stride_pulses"] = *m.stride_pulses;
        }
        if (!m.pair.empty()) {
            j["pair"] = m.pair;
        }
        methods.push_back(j);
    }
    json embeddings = json::array();
    for (const auto &e : plan.embeddings) {
        embeddings.push_back({{"id", e.id}, {"vertices", e.vertices}});
    }
    json durations{{"target_pulses", plan.target_pulses}};
    if (plan.stride_pulses) {
        durations["stride_pulses"] = *plan.stride_pulses;
    }
    return {
        {"device", device_to_json(plan.device)},
        {"embeddings", embeddings},
        {"methods", methods},
        {"durations", durations},
        {"states", {{"type1", plan.type1_states}, {"type2", plan.type2_states}}},
        {"shots", plan.shots},
        {"seed", plan.seed},
        {"samples_per_pulse", plan.samples_per_pulse},
        {"threads", plan.threads}};
}

namespace {

template <typename T>
T get_or(const json &j, const char *key, T fallback) {
    if (!j.contains(key) || j[key].is_null()) {
        return fallback;
    }
    try {
        return j[key].get<T>();
    } catch (const json::exception &) {
        throw std::invalid_argument(std::string("field '") + key + "' has the wrong type");
    }
}

DeviceModel device_from_plan(const json &j) {
    if (j.is_object() && j.contains("preset")) {
        std::string preset = j["preset"].get<std::string>();
        uint64_t seed = get_or<uint64_t>(j, "seed", 0);
        if (preset == "default") {
            return default_device(seed);
        }
        if (preset == "path") {
            return path_device(
                get_or<int>(j, "n", 4),
                seed,
                get_or<double>(j, "tau_p_s", kDefaultTauP),
                get_or<double>(j, "j_tau_p", 5e-3),
                get_or<double>(j, "field_fraction", 0.1));
        }
        throw std::invalid_argument("unknown device preset '" + preset + "'");
    }
    return device_from_json(j);
}

std::string embedding_id(size_t size, size_t index) {
    return "n" + std::to_string(size) + "_" + std::to_string(index);
}

}  // namespace

ExperimentPlan plan_from_json(const json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("plan must be a JSON object");
    }
    ExperimentPlan plan;
    plan.device = device_from_plan(j.contains("device") ? j["device"] : json{{"preset", "default"}});
    if (j.contains("embeddings")) {
        std::map<size_t, size_t> per_size;
        for (const auto &e : j["embeddings"]) {
            Embedding emb;
            if (e.is_array()) {
                emb.vertices = e.get<std::vector<int>>();
            } else {
                emb.vertices = e.at("vertices").get<std::vector<int>>();
                emb.id = get_or<std::string>(e, "id", "");
            }
            if (emb.id.empty()) {
                emb.id = embedding_id(emb.vertices.size(), per_size[emb.vertices.size()]);
            }
            ++per_size[emb.vertices.size()];
            plan.embeddings.push_back(std::move(emb));
        }
    } else {
        auto sizes = get_or<std::vector<int>>(j, "embedding_sizes", {plan.device.num_qubits()});
        int per = get_or<int>(j, "embeddings_per_size", 1);
        for (int size : sizes) {
            auto paths = generate_embeddings(plan.device.graph, size, per);
            for (size_t k = 0; k < paths.size(); ++k) {
                plan.embeddings.push_back({embedding_id(size, k), paths[k]});
            }
        }
    }
    if (!j.contains("methods") || !j["methods"].is_array()) {
        throw std::invalid_argument("missing field 'methods'");
    }
    for (const auto &m : j["methods"]) {
        MethodSpec spec;
        spec.label = m.at("label").get<std::string>();
        spec.kind = parse_method_kind(m.at("kind").get<std::string>());
        spec.sequence = get_or<std::string>(m, "sequence", "");
        spec.blue = get_or<std::string>(m, "blue", "");
        spec.k = get_or<int>(m, "k", spec.kind == MethodKind::sim ? 2 : 1);
        spec.pad = parse_pad_mode(get_or<std::string>(m, "pad", "symmetric"));
        if (m.contains("shape")) {
            spec.shape = shape_from_json(m["shape"]);
        }
        if (m.contains("target_pulses")) {
            spec.target_pulses = m["target_pulses"].get<long>();
        }
        if (m.contains("stride_pulses")) {
            spec.stride_pulses = m["stride_pulses"].get<long>();
        }
        spec.pair = get_or<std::string>(m, "pair", "");
        if (m.contains("schedule")) {
            const json &sj = m["schedule"];
            if (sj.contains("red")) {
                spec.custom = schedule_from_json(sj);
            } else {
                Sequence seq = sequence_from_json(sj);
                spec.custom = ColoredSchedule{seq, seq};
            }
        }
        plan.methods.push_back(spec);
    }
    if (j.contains("durations")) {
        const json &d = j["durations"];
        plan.target_pulses = get_or<long>(d, "target_pulses", plan.target_pulses);
        if (d.contains("stride_pulses")) {
            plan.stride_pulses = d["stride_pulses"].get<long>();
        }
    }
    if (j.contains("states")) {
        plan.type1_states = get_or<int>(j["states"], "type1", 6);
        plan.type2_states = get_or<int>(j["states"], "type2", 14);
    }
    plan.shots = get_or<long>(j, "shots", plan.shots);
    plan.seed = get_or<uint64_t>(j, "seed", plan.seed);
    plan.samples_per_pulse = get_or<int>(j, "samples_per_pulse", plan.samples_per_pulse);
    plan.threads = get_or<int>(j, "threads", plan.threads);
    plan.validate();
    return plan;
}

size_t Dataset::row_count() const {
    size_t n = 0;
    for (const auto &r : records) {
        n += r.points.size();
    }
    return n;
}

namespace {

std::string state_id(size_t index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "s%02zu", index);
    return buf;
}

// Evolution engine for one (embedding, method) pair, shared read-only by its cells.
struct Engine {
    DeviceModel device;
    std::optional<CycleEvolver> cycle;
    /// Idle methods: one tau_p of free evolution per unit.
    std::optional<CycleEvolver> idle_unit;
    std::string error;
};

long idle_units(double duration, double tau_p) {
    double u = duration / tau_p;
    long r = std::lround(u);
    if (std::abs(u - r) > 1e-6) {
        throw std::invalid_argument("idle duration is not a multiple of tau_p");
    }
    return r;
}

template <typename F>
void parallel_for(size_t count, int threads, F &&body) {
    size_t workers = threads > 0 ? (size_t)threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                body(i);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
}

}  // namespace

Dataset run_experiment(const ExperimentPlan &plan, const RunHooks &hooks) {
    plan.validate();
    std::vector<MethodTiming> timings;
    for (const auto &m : plan.methods) {
        timings.push_back(method_timing(m, plan.device.tau_p_s));
    }
    auto points = schedule_points(timings, plan.target_pulses, plan.stride_pulses);

    size_t num_methods = plan.methods.size();
    std::vector<Engine> engines(plan.embeddings.size() * num_methods);
    std::map<size_t, std::vector<StateSpec>> states_by_size;
    for (const auto &e : plan.embeddings) {
        size_t n = e.vertices.size();
        if (!states_by_size.count(n)) {
            states_by_size[n] = prepare_states(
                (int)n, plan.type1_states, plan.type2_states, derive_seed(plan.seed, {hash_label("states"), n}));
        }
    }
    parallel_for(engines.size(), plan.threads, [&](size_t idx) {
        const Embedding &emb = plan.embeddings[idx / num_methods];
        const MethodSpec &method = plan.methods[idx % num_methods];
        Engine &eng = engines[idx];
        try {
            eng.device = plan.device.restricted_to(emb.vertices);
            size_t dim = size_t{1} << emb.vertices.size();
            size_t applications = 0;
            if (method.kind == MethodKind::idle) {
                eng.idle_unit.emplace(
                    eng.device,
                    std::vector<Sequence>(emb.vertices.size(), idle_sequence(plan.device.tau_p_s, plan.device.tau_p_s)),
                    plan.samples_per_pulse);
                applications = idle_units(points[idx % num_methods].back().duration_s, plan.device.tau_p_s);
                if (dim <= 64 && applications > dim) {
                    eng.idle_unit->build_dense_cache();
                }
            } else {
                eng.cycle.emplace(eng.device, method_schedule(method, eng.device), plan.samples_per_pulse);
                applications = points[idx % num_methods].back().cycles;
                if (dim <= 64 && applications > dim) {
                    eng.cycle->build_dense_cache();
                }
            }
        } catch (const std::exception &ex) {
            eng.error = ex.what();
        }
    });

    struct Cell {
        size_t embedding;
        size_t method;
        size_t state;
    };
    std::vector<Cell> cells;
    for (size_t e = 0; e < plan.embeddings.size(); ++e) {
        size_t n_states = states_by_size[plan.embeddings[e].vertices.size()].size();
        for (size_t s = 0; s < n_states; ++s) {
            for (size_t m = 0; m < num_methods; ++m) {
                cells.push_back({e, m, s});
            }
        }
    }
    std::vector<std::optional<SurvivalRecord>> results(cells.size());
    std::vector<std::optional<CellFailure>> failures(cells.size());
    std::mutex sink;
    parallel_for(cells.size(), plan.threads, [&](size_t idx) {
        const Cell &cell = cells[idx];
        const Embedding &emb = plan.embeddings[cell.embedding];
        const MethodSpec &method = plan.methods[cell.method];
        const Engine &eng = engines[cell.embedding * num_methods + cell.method];
        const StateSpec &state = states_by_size[emb.vertices.size()][cell.state];
        SurvivalRecord rec{method.label, emb.id, state_id(cell.state), {}};
        try {
            if (!eng.error.empty()) {
                throw std::runtime_error(eng.error);
            }
            StateVector psi = product_state(state.poles);
            long done = 0;
            const auto &pts = points[cell.method];
            for (size_t k = 0; k < pts.size(); ++k) {
                const auto &pt = pts[k];
                if (eng.cycle.has_value()) {
                    for (; done < pt.cycles; ++done) {
                        eng.cycle->apply(psi);
                    }
                } else {
                    long units = idle_units(pt.duration_s, plan.device.tau_p_s);
                    for (; done < units; ++done) {
                        eng.idle_unit->apply(psi);
                    }
                }
                double norm = 0;
                for (const auto &a : psi) {
                    norm += std::norm(a);
                }
                if (!(std::abs(std::sqrt(norm) - 1) <= 1e-9)) {
                    throw std::runtime_error("statevector norm drifted beyond 1e-9");
                }
                auto probs = decoded_distribution(state.poles, psi);
                uint64_t seed = derive_seed(
                    plan.seed, {hash_label(emb.id), (uint64_t)cell.state, hash_label(method.label), (uint64_t)k});
                SurvivalPoint p{pt.duration_s, pt.pulses, plan.shots, 0, 0};
                p.zeros = sample_zero_count(probs, plan.shots, seed);
                p.p0 = (double)p.zeros / (double)p.shots;
                rec.points.push_back(p);
            }
            std::lock_guard<std::mutex> lock(sink);
            results[idx] = rec;
            if (hooks.on_record) {
                hooks.on_record(rec);
            }
        } catch (const std::exception &ex) {
            CellFailure f{method.label, emb.id, rec.state_id, ex.what()};
            std::lock_guard<std::mutex> lock(sink);
            failures[idx] = f;
            if (hooks.on_failure) {
                hooks.on_failure(f);
            }
        }
    });

    Dataset data;
    for (auto &r : results) {
        if (r.has_value()) {
            data.records.push_back(std::move(*r));
        }
    }
    for (auto &f : failures) {
        if (f.has_value()) {
            data.failures.push_back(std::move(*f));
        }
    }
    auto key = [](const auto &r) { return std::tie(r.method, r.embedding_id, r.state_id); };
    std::sort(data.records.begin(), data.records.end(), [&](const auto &a, const auto &b) { return key(a) < key(b); });
    std::sort(data.failures.begin(), data.failures.end(), [&](const auto &a, const auto &b) { return key(a) < key(b); });
    return data;
}

void write_results_csv(std::ostream &out, const Dataset &data) {
    out << "method,embedding_id,state_id,duration_s,pulses,shots,zeros,p0\n";
    for (const auto &r : data.records) {
        for (const auto &p : r.points) {
            out << r.method << "," << r.embedding_id << "," << r.state_id << "," << format_double(p.duration_s) << ","
                << p.pulses << "," << p.shots << "," << p.zeros << "," << format_double(p.p0) << "\n";
        }
    }
}

namespace {

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, ',')) {
        out.push_back(cur);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

}  // namespace

Dataset read_results_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("results CSV is empty");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != "method,embedding_id,state_id,duration_s,pulses,shots,zeros,p0") {
        throw std::invalid_argument("results CSV has an unexpected header");
    }
    std::map<std::tuple<std::string, std::string, std::string>, SurvivalRecord> groups;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto f = split_csv(line);
        try {
            if (f.size() != 8) {
                throw std::invalid_argument("expected 8 columns");
            }
            SurvivalPoint p;
            p.duration_s = parse_double(f[3]);
            p.pulses = std::stol(f[4]);
            p.shots = std::stol(f[5]);
            p.zeros = std::stol(f[6]);
            p.p0 = parse_double(f[7]);
            if (p.shots < 1 || p.zeros < 0 || p.zeros > p.shots) {
                throw std::invalid_argument("shot counts out of range");
            }
            auto &rec = groups[{f[0], f[1], f[2]}];
            rec.method = f[0];
            rec.embedding_id = f[1];
            rec.state_id = f[2];
            rec.points.push_back(p);
        } catch (const std::exception &ex) {
            throw std::invalid_argument("results CSV line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    Dataset data;
    for (auto &[k, rec] : groups) {
        std::sort(rec.points.begin(), rec.points.end(), [](const auto &a, const auto &b) {
            return a.duration_s < b.duration_s;
        });
        data.records.push_back(std::move(rec));
    }
    return data;
}

std::vector<EmbeddingFit> fit_embeddings(const Dataset &data) {
    std::map<std::pair<std::string, std::string>, std::map<double, std::pair<long, long>>> pooled;
    for (const auto &r : data.records) {
        auto &curve = pooled[{r.method, r.embedding_id}];
        for (const auto &p : r.points) {
            curve[p.duration_s].first += p.zeros;
            curve[p.duration_s].second += p.shots;
        }
    }
    std::vector<EmbeddingFit> out;
    for (const auto &[key, curve] : pooled) {
        std::vector<DecayPoint> pts;
        for (const auto &[t, counts] : curve) {
            pts.push_back({t, (double)counts.first / (double)counts.second});
        }
        EmbeddingFit f{key.first, key.second, {}};
        try {
            f.fit = fit_decay(pts);
        } catch (const std::invalid_argument &) {
            f.fit.flag = FitFlag::not_converged;
            f.fit.amplitude = f.fit.gamma = f.fit.offset = f.fit.tau_gamma = f.fit.rss = NAN;
            f.fit.std_error = {NAN, NAN, NAN};
        }
        out.push_back(f);
    }
    return out;
}

void write_fits_csv(std::ostream &out, std::span<const EmbeddingFit> fits) {
    out << "method,embedding_id,A,gamma_per_s,c,tau_gamma_s,rss,flag\n";
    for (const auto &f : fits) {
        out << f.method << "," << f.embedding_id << "," << format_double(f.fit.amplitude) << ","
            << format_double(f.fit.gamma) << "," << format_double(f.fit.offset) << ","
            << format_double(f.fit.tau_gamma) << "," << format_double(f.fit.rss) << "," << fit_flag_name(f.fit.flag)
            << "\n";
    }
}

std::vector<EmbeddingFit> read_fits_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("fits CSV is empty");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != "method,embedding_id,A,gamma_per_s,c,tau_gamma_s,rss,flag") {
        throw std::invalid_argument("fits CSV has an unexpected header");
    }
    std::vector<EmbeddingFit> out;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto f = split_csv(line);
        try {
            if (f.size() != 8) {
                throw std::invalid_argument("expected 8 columns");
            }
            EmbeddingFit e{f[0], f[1], {}};
            e.fit.amplitude = parse_double(f[2]);
            e.fit.gamma = parse_double(f[3]);
            e.fit.offset = parse_double(f[4]);
            e.fit.tau_gamma = parse_double(f[5]);
            e.fit.rss = parse_double(f[6]);
            e.fit.flag = parse_fit_flag(f[7]);
            out.push_back(e);
        } catch (const std::exception &ex) {
            throw std::invalid_argument("fits CSV line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    return out;
}

MethodKind kind_from_label(const std::string &label) {
    if (label.rfind("IDLE", 0) == 0) {
        return MethodKind::idle;
    }
    if (label.rfind("SIM", 0) == 0) {
        return MethodKind::sim;
    }
    if (label.rfind("CR", 0) == 0) {
        return MethodKind::cr;
    }
    throw std::invalid_argument("method label '" + label + "' does not start with IDLE, SIM or CR");
}

std::string pair_from_label(const std::string &label) {
    auto dash = label.find('-');
    return dash == std::string::npos ? "" : label.substr(dash + 1);
}

int size_from_embedding_id(const std::string &id) {
    if (id.size() < 2 || id[0] != 'n') {
        return 0;
    }
    int n = 0;
    for (size_t i = 1; i < id.size() && std::isdigit((unsigned char)id[i]); ++i) {
        n = n * 10 + (id[i] - '0');
    }
    return n;
}

std::vector<SummaryRow> summarize(std::span<const EmbeddingFit> fits) {
    std::map<std::pair<int, std::string>, std::vector<double>> taus;
    for (const auto &f : fits) {
        if (f.fit.flag == FitFlag::not_converged && std::isnan(f.fit.gamma)) {
            continue;
        }
        taus[{size_from_embedding_id(f.embedding_id), f.method}].push_back(f.fit.tau_gamma);
    }
    std::vector<SummaryRow> rows;
    for (const auto &[key, values] : taus) {
        SummaryRow row;
        row.n = key.first;
        row.method = key.second;
        row.kind = kind_from_label(key.second);
        row.pair = pair_from_label(key.second);
        row.embeddings = values.size();
        row.median_tau_s = median(values);
        row.iqr_tau_s = values.size() == 1 ? 0 : iqr(values);
        rows.push_back(row);
    }
    for (auto &row : rows) {
        if (row.kind == MethodKind::sim) {
            std::optional<double> best_idle;
            for (const auto &o : rows) {
                if (o.n == row.n && o.kind == MethodKind::idle) {
                    best_idle = std::max(best_idle.value_or(o.median_tau_s), o.median_tau_s);
                }
            }
            if (best_idle) {
                row.sim_over_idle = row.median_tau_s / *best_idle;
            }
        } else if (row.kind == MethodKind::cr) {
            for (const auto &o : rows) {
                if (o.n == row.n && o.kind == MethodKind::sim && o.pair == row.pair) {
                    row.cr_over_sim = row.median_tau_s / o.median_tau_s;
                }
            }
        }
    }
    return rows;
}

std::vector<SummaryRow> summarize(const Dataset &data) {
    auto fits = fit_embeddings(data);
    return summarize(fits);
}

void write_summary_csv(std::ostream &out, std::span<const SummaryRow> rows) {
    out << "n,method,kind,pair,embeddings,median_tau_gamma_s,iqr_tau_gamma_s,sim_over_idle,cr_over_sim\n";
    for (const auto &r : rows) {
        out << r.n << "," << r.method << "," << method_kind_name(r.kind) << "," << r.pair << "," << r.embeddings
            << "," << format_double(r.median_tau_s) << "," << format_double(r.iqr_tau_s) << ","
            << (r.sim_over_idle ? format_double(*r.sim_over_idle) : "") << ","
            << (r.cr_over_sim ? format_double(*r.cr_over_sim) : "") << "\n";
    }
}

}  // namespace crdd
