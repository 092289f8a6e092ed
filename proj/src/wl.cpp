#include "mpcx/wl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace mpcx {

namespace {

Hash128 feature_color(const Feature& f) {
    Hasher h;
    h.update_u64(static_cast<std::uint64_t>(f.size()));
    for (std::int64_t x : f) h.update_i64(x);
    return h.digest();
}

std::vector<Hash128> refine_once(const Graph& g, const std::vector<Hash128>& prev) {
    std::vector<Hash128> next(prev.size());
    std::vector<Hash128> nbr;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        nbr.clear();
        for (NodeId w : g.neighbors(v)) nbr.push_back(prev[static_cast<std::size_t>(w)]);
        std::sort(nbr.begin(), nbr.end());
        Hasher h;
        h.update(prev[static_cast<std::size_t>(v)]);
        h.update_u64(static_cast<std::uint64_t>(nbr.size()));
        for (const Hash128& c : nbr) h.update(c);
        next[static_cast<std::size_t>(v)] = h.digest();
    }
    return next;
}

// Canonical partition ids of a color vector (first occurrence order after
// sorting node ids by color), used only to detect refinement fixpoints.
std::vector<int> partition_ids(const std::vector<Hash128>& colors) {
    std::map<Hash128, int> index;
    std::vector<int> ids(colors.size());
    for (std::size_t v = 0; v < colors.size(); ++v) {
        auto [it, inserted] = index.emplace(colors[v], static_cast<int>(index.size()));
        ids[v] = it->second;
    }
    return ids;
}

// Canonical byte serialization: n, sorted edges, then features in id order.
std::vector<std::int64_t> serialize(const Graph& g) {
    std::vector<std::int64_t> out;
    out.push_back(g.node_count());
    for (const auto& [a, b] : g.edges()) {
        out.push_back(a);
        out.push_back(b);
    }
    out.push_back(-1);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const Feature& f = g.feature(v);
        out.push_back(static_cast<std::int64_t>(f.size()));
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

} // namespace

WlColoring wl_refine(const Graph& g, std::int64_t layers) {
    if (layers < 0) raise(ErrorCode::InvalidParameters, "negative layer count");
    WlColoring coloring;
    std::vector<Hash128> colors(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v)
        colors[static_cast<std::size_t>(v)] = feature_color(g.feature(v));
    coloring.colors.push_back(colors);
    for (std::int64_t l = 1; l <= layers; ++l) {
        colors = refine_once(g, colors);
        coloring.colors.push_back(colors);
    }
    return coloring;
}

WlColoring wl_refine_stable(const Graph& g) {
    WlColoring coloring;
    std::vector<Hash128> colors(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v)
        colors[static_cast<std::size_t>(v)] = feature_color(g.feature(v));
    coloring.colors.push_back(colors);
    auto ids = partition_ids(colors);
    for (std::int64_t l = 1; l <= g.node_count(); ++l) {
        colors = refine_once(g, colors);
        coloring.colors.push_back(colors);
        auto next_ids = partition_ids(colors);
        if (next_ids == ids) break;
        ids = std::move(next_ids);
    }
    return coloring;
}

Hash128 graph_hash(const WlColoring& coloring) {
    std::vector<Hash128> colors = coloring.final_colors();
    std::sort(colors.begin(), colors.end());
    Hasher h;
    h.update_u64(static_cast<std::uint64_t>(colors.size()));
    for (const Hash128& c : colors) h.update(c);
    return h.digest();
}

Hash128 graph_wl_hash(const Graph& g, std::int64_t layers) {
    return graph_hash(wl_refine(g, layers));
}

Hash128 graph_identity_hash(const Graph& g) {
    return graph_hash(wl_refine_stable(g));
}

void Dataset::add(Graph g) {
    graphs.push_back(std::move(g));
    targets.push_back(std::nullopt);
}

void Dataset::add(Graph g, std::vector<std::int64_t> node_targets) {
    if (static_cast<std::int64_t>(node_targets.size()) != g.node_count())
        raise(ErrorCode::InvalidParameters, "one target per node required");
    graphs.push_back(std::move(g));
    targets.push_back(std::move(node_targets));
}

double uniqueness_fraction(const Dataset& ds, std::int64_t layers) {
    if (ds.size() == 0) raise(ErrorCode::EmptyDataset, "uniqueness over empty dataset");

    std::set<std::vector<std::int64_t>> seen;
    std::vector<const Graph*> kept;
    for (const Graph& g : ds.graphs)
        if (seen.insert(serialize(g)).second) kept.push_back(&g);

    std::map<Hash128, int> counts;
    std::vector<Hash128> hashes;
    hashes.reserve(kept.size());
    for (const Graph* g : kept) {
        hashes.push_back(graph_wl_hash(*g, layers));
        ++counts[hashes.back()];
    }
    std::int64_t unique = 0;
    for (const Hash128& h : hashes)
        if (counts[h] == 1) ++unique;
    return static_cast<double>(unique) / static_cast<double>(kept.size());
}

std::vector<std::vector<MpcValue>> wlc(const Dataset& ds, std::int64_t layers) {
    if (ds.size() == 0) raise(ErrorCode::EmptyDataset, "wlc over empty dataset");
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (!ds.targets[i].has_value())
            raise(ErrorCode::MissingTargets, "graph " + std::to_string(i) + " carries no targets");

    // A final color is deducible iff every (graph, node) pair sharing it has
    // the same target over the whole dataset.
    std::map<Hash128, std::pair<std::int64_t, bool>> classes; // color -> (target, conflicted)
    std::vector<std::vector<Hash128>> finals;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        finals.push_back(wl_refine(ds.graphs[i], layers).final_colors());
        const auto& tgt = *ds.targets[i];
        for (std::size_t v = 0; v < finals[i].size(); ++v) {
            auto [it, inserted] = classes.emplace(finals[i][v], std::make_pair(tgt[v], false));
            if (!inserted && it->second.first != tgt[v]) it->second.second = true;
        }
    }

    std::vector<std::vector<MpcValue>> out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        std::vector<MpcValue> row;
        row.reserve(finals[i].size());
        for (const Hash128& c : finals[i])
            row.push_back(classes[c].second ? MpcValue::inf() : MpcValue::finite(0.0));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace mpcx
