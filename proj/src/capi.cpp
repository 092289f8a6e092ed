#include "mpcx.h"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <sstream>

#include "mpcx/bounds.hpp"
#include "mpcx/generators.hpp"
#include "mpcx/graph_io.hpp"
#include "mpcx/mpc.hpp"
#include "mpcx/wl.hpp"

using namespace mpcx;

struct mpcx_graph {
    Graph g;
};

struct mpcx_dataset {
    Dataset ds;
};

namespace {

thread_local std::string g_last_error;

mpcx_status status_of(const Error& e) {
    switch (e.code()) {
        case ErrorCode::InvalidParameters: return MPCX_ERR_INVALID_PARAMETERS;
        case ErrorCode::NodeOutOfRange: return MPCX_ERR_NODE_OUT_OF_RANGE;
        case ErrorCode::ParseError: return MPCX_ERR_PARSE;
        case ErrorCode::IoError: return MPCX_ERR_IO;
        case ErrorCode::GenerationExhausted: return MPCX_ERR_GENERATION_EXHAUSTED;
        case ErrorCode::EnumerationTooLarge: return MPCX_ERR_ENUMERATION_TOO_LARGE;
        case ErrorCode::NotSimulable: return MPCX_ERR_NOT_SIMULABLE;
        case ErrorCode::EmptyDataset: return MPCX_ERR_EMPTY_DATASET;
        case ErrorCode::MissingTargets: return MPCX_ERR_MISSING_TARGETS;
        case ErrorCode::UnsupportedArch: return MPCX_ERR_UNSUPPORTED_ARCH;
        case ErrorCode::UnknownChannel: return MPCX_ERR_UNKNOWN_CHANNEL;
    }
    return MPCX_ERR_UNKNOWN;
}

template <typename Fn>
mpcx_status guarded(Fn&& fn) {
    try {
        fn();
        return MPCX_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MPCX_ERR_UNKNOWN;
    } catch (...) {
        g_last_error = "unknown error";
        return MPCX_ERR_UNKNOWN;
    }
}

mpcx_status require(bool cond, const char* msg) {
    if (cond) return MPCX_OK;
    g_last_error = msg;
    return MPCX_ERR_INVALID_PARAMETERS;
}

Arch arch_of(int arch, std::int64_t max_cycle) {
    switch (arch) {
        case MPCX_ARCH_MLP: return Arch::mlp();
        case MPCX_ARCH_STANDARD: return Arch::standard();
        case MPCX_ARCH_VIRTUAL_NODE: return Arch::virtual_node();
        case MPCX_ARCH_GSN: return Arch::gsn(max_cycle);
        case MPCX_ARCH_FRAGNET: return Arch::fragnet(max_cycle);
        case MPCX_ARCH_CIN: return Arch::cin(max_cycle);
    }
    raise(ErrorCode::InvalidParameters, "unknown architecture id " + std::to_string(arch));
}

TaskSpec task_of(const mpcx_task* task) {
    if (task == nullptr) raise(ErrorCode::InvalidParameters, "null task");
    switch (task->kind) {
        case MPCX_TASK_RETAIN:
            return TaskSpec::retain(task->target);
        case MPCX_TASK_PROPAGATE:
            return TaskSpec::propagate(task->source, task->target);
        case MPCX_TASK_RING: {
            if (task->cycle == nullptr || task->cycle_len < 3)
                raise(ErrorCode::InvalidParameters, "ring task needs a cycle of >= 3 nodes");
            std::vector<NodeId> nodes(task->cycle, task->cycle + task->cycle_len);
            return TaskSpec::ring_transfer(task->target, canonical_cycle(std::move(nodes)),
                                           task->source);
        }
    }
    raise(ErrorCode::InvalidParameters, "unknown task kind " + std::to_string(task->kind));
}

void copy_hex(const Hash128& h, char* buf, std::size_t buf_len) {
    if (buf == nullptr || buf_len < 33)
        raise(ErrorCode::InvalidParameters, "hex buffer must hold 33 bytes");
    const std::string hex = to_hex(h);
    std::memcpy(buf, hex.c_str(), 33);
}

void fill_bound(const Bound& b, mpcx_bound* out) {
    out->is_upper = b.direction == BoundDirection::Upper ? 1 : 0;
    out->value_nats = b.value.infinite ? 0.0 : b.value.nats;
    out->infinite = b.value.infinite ? 1 : 0;
    out->lift_audited = b.provenance == Provenance::LiftAudited ? 1 : 0;
    std::snprintf(out->formula_id, sizeof(out->formula_id), "%s", b.formula_id.c_str());
}

void fill_bounds(const std::vector<Bound>& bounds, mpcx_bound* out, std::size_t cap,
                 std::size_t* count) {
    if (out == nullptr || count == nullptr)
        raise(ErrorCode::InvalidParameters, "null output buffer");
    *count = std::min(cap, bounds.size());
    for (std::size_t i = 0; i < *count; ++i) fill_bound(bounds[i], &out[i]);
}

} // namespace

extern "C" {

const char* mpcx_last_error(void) {
    return g_last_error.c_str();
}

const char* mpcx_version(void) {
    return "0.1.0";
}

mpcx_status mpcx_graph_gen_regular(int64_t n, int64_t r, uint64_t seed, mpcx_graph** out) {
    if (auto s = require(out != nullptr, "null output")) return s;
    return guarded([&] { *out = new mpcx_graph{gen_random_regular(n, r, seed)}; });
}

mpcx_status mpcx_graph_gen_erdos_renyi(int64_t n, double p, uint64_t seed, mpcx_graph** out) {
    if (auto s = require(out != nullptr, "null output")) return s;
    return guarded([&] { *out = new mpcx_graph{gen_erdos_renyi(n, p, seed)}; });
}

mpcx_status mpcx_graph_gen_planted_ring(int64_t n, int64_t r, int64_t s, uint64_t seed,
                                        mpcx_graph** out, int64_t* v, int64_t* cycle,
                                        size_t cycle_cap, size_t* cycle_len) {
    if (auto st = require(out != nullptr && v != nullptr && cycle_len != nullptr, "null output"))
        return st;
    return guarded([&] {
        PlantedRing planted = gen_planted_ring(n, r, s, seed);
        *v = planted.v;
        *cycle_len = planted.cycle.nodes.size();
        if (cycle != nullptr) {
            if (cycle_cap < planted.cycle.nodes.size())
                raise(ErrorCode::InvalidParameters, "cycle buffer too small");
            std::copy(planted.cycle.nodes.begin(), planted.cycle.nodes.end(), cycle);
        }
        *out = new mpcx_graph{std::move(planted.graph)};
    });
}

mpcx_status mpcx_graph_gen_cycle(int64_t n, mpcx_graph** out) {
    if (auto s = require(out != nullptr, "null output")) return s;
    return guarded([&] { *out = new mpcx_graph{gen_cycle_graph(n)}; });
}

mpcx_status mpcx_graph_gen_path(int64_t n, mpcx_graph** out) {
    if (auto s = require(out != nullptr, "null output")) return s;
    return guarded([&] { *out = new mpcx_graph{gen_path_graph(n)}; });
}

mpcx_status mpcx_graph_load(const char* path, mpcx_graph** out) {
    if (auto s = require(out != nullptr && path != nullptr, "null argument")) return s;
    return guarded([&] { *out = new mpcx_graph{load_graph(path)}; });
}

mpcx_status mpcx_graph_save(const mpcx_graph* g, const char* path) {
    if (auto s = require(g != nullptr && path != nullptr, "null argument")) return s;
    return guarded([&] { save_graph(g->g, path); });
}

void mpcx_graph_free(mpcx_graph* g) {
    delete g;
}

int64_t mpcx_graph_node_count(const mpcx_graph* g) {
    return g ? g->g.node_count() : 0;
}

int64_t mpcx_graph_edge_count(const mpcx_graph* g) {
    return g ? g->g.edge_count() : 0;
}

mpcx_status mpcx_graph_degree(const mpcx_graph* g, int64_t v, int64_t* out) {
    if (auto s = require(g != nullptr && out != nullptr, "null argument")) return s;
    return guarded([&] { *out = g->g.degree(v); });
}

mpcx_status mpcx_graph_regular_degree(const mpcx_graph* g, int* is_regular, int64_t* r) {
    if (auto s = require(g != nullptr && is_regular != nullptr && r != nullptr, "null argument"))
        return s;
    return guarded([&] {
        *is_regular = 1;
        *r = g->g.node_count() > 0 ? g->g.degree(0) : 0;
        for (NodeId v = 1; v < g->g.node_count(); ++v)
            if (g->g.degree(v) != *r) {
                *is_regular = 0;
                break;
            }
    });
}

mpcx_status mpcx_graph_bfs(const mpcx_graph* g, int64_t src, int64_t* out, size_t out_len) {
    if (auto s = require(g != nullptr && out != nullptr, "null argument")) return s;
    return guarded([&] {
        const auto dist = bfs_distances(g->g, src);
        if (out_len < dist.size()) raise(ErrorCode::InvalidParameters, "output buffer too small");
        std::copy(dist.begin(), dist.end(), out);
    });
}

mpcx_status mpcx_graph_wl_hash_hex(const mpcx_graph* g, int64_t layers, char* buf,
                                   size_t buf_len) {
    if (auto s = require(g != nullptr, "null graph")) return s;
    return guarded([&] {
        const Hash128 h =
            layers < 0 ? graph_identity_hash(g->g) : graph_wl_hash(g->g, layers);
        copy_hex(h, buf, buf_len);
    });
}

mpcx_status mpcx_graph_wl_color_hex(const mpcx_graph* g, int64_t layers, int64_t node, char* buf,
                                    size_t buf_len) {
    if (auto s = require(g != nullptr, "null graph")) return s;
    return guarded([&] {
        g->g.check_node(node);
        const WlColoring coloring = wl_refine(g->g, layers);
        copy_hex(coloring.final_colors()[static_cast<std::size_t>(node)], buf, buf_len);
    });
}

mpcx_status mpcx_graph_save_lift(const mpcx_graph* g, int arch, int64_t max_cycle,
                                 const char* path) {
    if (auto s = require(g != nullptr && path != nullptr, "null argument")) return s;
    return guarded([&] { save_mpgraph(transform(g->g, arch_of(arch, max_cycle)), path); });
}

mpcx_status mpcx_estimate_mpc(const mpcx_graph* g, int arch, int64_t max_cycle,
                              const mpcx_task* task, int64_t layers, uint64_t trials,
                              uint64_t seed, int threads, mpcx_estimate* out) {
    if (auto s = require(g != nullptr && out != nullptr, "null argument")) return s;
    return guarded([&] {
        const Arch a = arch_of(arch, max_cycle);
        const TaskSpec spec = task_of(task);
        const MpcRun run = build_run(g->g, a, spec, layers);
        const McEstimate est =
            mc_success_prob(run.mpg, run.infl, run.instances, run.layers, trials, seed, threads);
        out->trials = est.trials;
        out->successes = est.successes;
        out->p_hat = est.p_hat;
        out->mpc_nats = est.mpc.infinite ? 0.0 : est.mpc.nats;
        out->mpc_infinite = est.mpc.infinite ? 1 : 0;
        out->ci_lo = est.ci_lo;
        out->ci_hi = est.ci_hi;
        out->effective_layers = run.layers;
    });
}

mpcx_status mpcx_exact_mpc(const mpcx_graph* g, int arch, int64_t max_cycle,
                           const mpcx_task* task, int64_t layers, uint64_t cap,
                           mpcx_exact_result* out) {
    if (auto s = require(g != nullptr && out != nullptr, "null argument")) return s;
    return guarded([&] {
        const ExactMpc res = exact_mpc(g->g, arch_of(arch, max_cycle), task_of(task), layers,
                                       static_cast<std::size_t>(cap));
        out->p = rational_to_double(res.p);
        out->mpc_nats = res.mpc.infinite ? 0.0 : res.mpc.nats;
        out->mpc_infinite = res.mpc.infinite ? 1 : 0;
        out->channels = res.channels;
        std::ostringstream ratio;
        ratio << res.p;
        std::snprintf(out->ratio, sizeof(out->ratio), "%s", ratio.str().c_str());
    });
}

mpcx_status mpcx_bound_retain(const mpcx_graph* g, int arch, int64_t max_cycle, int64_t layers,
                              mpcx_bound* out) {
    if (auto s = require(g != nullptr && out != nullptr, "null argument")) return s;
    return guarded([&] {
        const MPGraph mpg = transform(g->g, arch_of(arch, max_cycle));
        fill_bound(bound_retain(mpg, mp_influence(mpg), layers), out);
    });
}

mpcx_status mpcx_bound_transfer(int arch, int64_t n, int64_t r, int64_t D, mpcx_bound* out,
                                size_t cap, size_t* count) {
    return guarded([&] { fill_bounds(bound_transfer(arch_of(arch, 6).kind, n, r, D), out, cap, count); });
}

mpcx_status mpcx_bound_ring(int arch, int64_t s, int64_t r, mpcx_bound* out, size_t cap,
                            size_t* count) {
    return guarded([&] { fill_bounds(bound_ring(arch_of(arch, 6).kind, s, r), out, cap, count); });
}

mpcx_status mpcx_rw_lower_bound(const mpcx_graph* g, int arch, int64_t max_cycle,
                                int64_t layers, int64_t u, int64_t v, mpcx_bound* out) {
    if (auto s = require(g != nullptr && out != nullptr, "null argument")) return s;
    return guarded([&] {
        const MPGraph mpg = transform(g->g, arch_of(arch, max_cycle));
        fill_bound(rw_lower_bound(mpg.graph, layers, u, v), out);
    });
}

mpcx_status mpcx_dataset_new(mpcx_dataset** out) {
    if (auto s = require(out != nullptr, "null output")) return s;
    return guarded([&] { *out = new mpcx_dataset{}; });
}

mpcx_status mpcx_dataset_add_file(mpcx_dataset* ds, const char* path) {
    if (auto s = require(ds != nullptr && path != nullptr, "null argument")) return s;
    return guarded([&] {
        LoadedGraph loaded = load_graph_file(path);
        if (loaded.targets)
            ds->ds.add(std::move(loaded.graph), std::move(*loaded.targets));
        else
            ds->ds.add(std::move(loaded.graph));
    });
}

mpcx_status mpcx_dataset_add_path(mpcx_dataset* ds, const char* path) {
    if (auto s = require(ds != nullptr && path != nullptr, "null argument")) return s;
    return guarded([&] {
        Dataset more = load_dataset(path);
        for (std::size_t i = 0; i < more.size(); ++i) {
            if (more.targets[i])
                ds->ds.add(std::move(more.graphs[i]), std::move(*more.targets[i]));
            else
                ds->ds.add(std::move(more.graphs[i]));
        }
    });
}

void mpcx_dataset_free(mpcx_dataset* ds) {
    delete ds;
}

int64_t mpcx_dataset_size(const mpcx_dataset* ds) {
    return ds ? static_cast<int64_t>(ds->ds.size()) : 0;
}

mpcx_status mpcx_dataset_node_count(const mpcx_dataset* ds, int64_t graph, int64_t* out) {
    if (auto s = require(ds != nullptr && out != nullptr, "null argument")) return s;
    return guarded([&] {
        if (graph < 0 || graph >= static_cast<int64_t>(ds->ds.size()))
            raise(ErrorCode::InvalidParameters, "graph index out of range");
        *out = ds->ds.graphs[static_cast<std::size_t>(graph)].node_count();
    });
}

mpcx_status mpcx_uniqueness_fraction(const mpcx_dataset* ds, int64_t layers, double* out) {
    if (auto s = require(ds != nullptr && out != nullptr, "null argument")) return s;
    return guarded([&] { *out = uniqueness_fraction(ds->ds, layers); });
}

mpcx_status mpcx_wlc(const mpcx_dataset* ds, int64_t layers, uint8_t* out, size_t out_len) {
    if (auto s = require(ds != nullptr && out != nullptr, "null argument")) return s;
    return guarded([&] {
        const auto verdicts = wlc(ds->ds, layers);
        std::size_t total = 0;
        for (const auto& row : verdicts) total += row.size();
        if (out_len < total) raise(ErrorCode::InvalidParameters, "output buffer too small");
        std::size_t i = 0;
        for (const auto& row : verdicts)
            for (const MpcValue& v : row) out[i++] = v.infinite ? 1 : 0;
    });
}

} // extern "C"
