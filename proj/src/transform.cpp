#include "mpcx/transform.hpp"

#include <algorithm>
#include <set>

#include "mpcx/hash128.hpp"

namespace mpcx {

const char* arch_name(ArchKind kind) {
    switch (kind) {
        case ArchKind::Mlp: return "mlp";
        case ArchKind::Standard: return "standard";
        case ArchKind::VirtualNode: return "virtual-node";
        case ArchKind::Gsn: return "gsn";
        case ArchKind::FragNet: return "fragnet";
        case ArchKind::Cin: return "cin";
    }
    return "?";
}

ArchKind arch_from_name(const std::string& name) {
    if (name == "mlp") return ArchKind::Mlp;
    if (name == "standard" || name == "gcn" || name == "gin" || name == "sage")
        return ArchKind::Standard;
    if (name == "virtual-node" || name == "vn" || name == "gcn-vn")
        return ArchKind::VirtualNode;
    if (name == "gsn") return ArchKind::Gsn;
    if (name == "fragnet") return ArchKind::FragNet;
    if (name == "cin") return ArchKind::Cin;
    raise(ErrorCode::InvalidParameters, "unknown architecture '" + name + "'");
}

const char* role_name(Role role) {
    switch (role) {
        case Role::Original: return "original";
        case Role::Virtual: return "virtual";
        case Role::EdgeCell: return "edge-cell";
        case Role::RingCell: return "ring-cell";
        case Role::Fragment: return "fragment";
        case Role::Readout: return "readout";
    }
    return "?";
}

NodeId MPGraph::find_node(Role role, const std::vector<NodeId>& prov) const {
    for (std::size_t v = 0; v < roles.size(); ++v)
        if (roles[v] == role && provenance[v] == prov) return static_cast<NodeId>(v);
    return -1;
}

bool MPGraph::edge_active(NodeId a, NodeId b, std::int64_t layer) const {
    if (a == b) return true; // the self channel is never masked
    const auto key = std::make_pair(std::min(a, b), std::max(a, b));
    const auto it = edge_masks.find(key);
    if (it == edge_masks.end()) return true;
    return std::binary_search(it->second.begin(), it->second.end(), layer);
}

namespace {

// Builder that collects added nodes and edges, then materializes the lift
// in one pass.
struct LiftBuilder {
    const Graph& input;
    bool keep_input_edges;
    std::vector<Role> roles;
    std::vector<Feature> features;               // added nodes only
    std::vector<std::vector<NodeId>> provenance; // added nodes only
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<Feature> original_features;      // overrides, empty = keep input

    explicit LiftBuilder(const Graph& g, bool with_edges)
        : input(g), keep_input_edges(with_edges) {}

    NodeId add_node(Role role, Feature f, std::vector<NodeId> prov) {
        roles.push_back(role);
        features.push_back(std::move(f));
        provenance.push_back(std::move(prov));
        return input.node_count() + static_cast<NodeId>(roles.size()) - 1;
    }

    void add_edge(NodeId a, NodeId b) { edges.emplace_back(a, b); }

    MPGraph build() {
        const std::int64_t n = input.node_count();
        MPGraph mpg;
        mpg.graph = Graph(n + static_cast<std::int64_t>(roles.size()));
        if (keep_input_edges)
            for (const auto& [a, b] : input.edges()) mpg.graph.add_edge(a, b);
        for (const auto& [a, b] : edges) mpg.graph.add_edge(a, b);

        for (NodeId v = 0; v < n; ++v)
            mpg.graph.set_feature(v, original_features.empty()
                                         ? input.feature(v)
                                         : original_features[static_cast<std::size_t>(v)]);
        for (std::size_t i = 0; i < roles.size(); ++i)
            mpg.graph.set_feature(n + static_cast<NodeId>(i), features[i]);

        mpg.roles.assign(static_cast<std::size_t>(n), Role::Original);
        mpg.roles.insert(mpg.roles.end(), roles.begin(), roles.end());
        mpg.origin.resize(static_cast<std::size_t>(n));
        for (NodeId v = 0; v < n; ++v) mpg.origin[static_cast<std::size_t>(v)] = v;
        mpg.provenance.assign(static_cast<std::size_t>(n), {});
        mpg.provenance.insert(mpg.provenance.end(), provenance.begin(), provenance.end());
        return mpg;
    }
};

// Order-invariant 128-bit digest of the constituent features, stored as two
// integer labels.
Feature multiset_feature(const Graph& g, const std::vector<NodeId>& nodes) {
    std::vector<Feature> feats;
    for (NodeId v : nodes) feats.push_back(g.feature(v));
    std::sort(feats.begin(), feats.end());
    Hasher h;
    for (const Feature& f : feats) {
        h.update_u64(static_cast<std::uint64_t>(f.size()));
        for (std::int64_t x : f) h.update_i64(x);
    }
    const Hash128 d = h.digest();
    return Feature{static_cast<std::int64_t>(d.hi), static_cast<std::int64_t>(d.lo)};
}

MPGraph transform_gsn(const Graph& g, std::int64_t max_cycle) {
    LiftBuilder lift(g, true);
    const auto counts = cycle_counts_per_node(g, max_cycle);
    lift.original_features.resize(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v) {
        Feature f = g.feature(v);
        const auto& c = counts[static_cast<std::size_t>(v)];
        f.insert(f.end(), c.begin(), c.end());
        lift.original_features[static_cast<std::size_t>(v)] = std::move(f);
    }
    return lift.build();
}

MPGraph transform_fragnet(const Graph& g, std::int64_t max_cycle) {
    LiftBuilder lift(g, true);
    for (const Cycle& c : enumerate_cycles(g, max_cycle)) {
        const NodeId f =
            lift.add_node(Role::Fragment, Feature{kSentinelLabel, c.length()}, c.nodes);
        for (NodeId v : c.nodes) lift.add_edge(f, v);
    }
    return lift.build();
}

MPGraph transform_cin(const Graph& g, std::int64_t max_cycle) {
    LiftBuilder lift(g, true);

    std::map<std::pair<NodeId, NodeId>, NodeId> edge_cell;
    for (const auto& [a, b] : g.edges()) {
        Feature fa = g.feature(a), fb = g.feature(b);
        if (fb < fa) std::swap(fa, fb);
        Feature f = fa;
        f.insert(f.end(), fb.begin(), fb.end());
        const NodeId e = lift.add_node(Role::EdgeCell, std::move(f), {a, b});
        lift.add_edge(e, a);
        lift.add_edge(e, b);
        edge_cell[{a, b}] = e;
    }

    std::set<std::pair<NodeId, NodeId>> cell_links;
    for (const Cycle& c : enumerate_cycles(g, max_cycle)) {
        std::vector<NodeId> cells;
        for (std::int64_t i = 0; i < c.length(); ++i) {
            NodeId a = c.nodes[static_cast<std::size_t>(i)];
            NodeId b = c.nodes[static_cast<std::size_t>((i + 1) % c.length())];
            if (a > b) std::swap(a, b);
            cells.push_back(edge_cell.at({a, b}));
        }
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t j = i + 1; j < cells.size(); ++j) {
                const auto link = std::minmax(cells[i], cells[j]);
                if (cell_links.emplace(link.first, link.second).second)
                    lift.add_edge(link.first, link.second);
            }
        const NodeId ring =
            lift.add_node(Role::RingCell, multiset_feature(g, c.nodes), c.nodes);
        for (NodeId e : cells) lift.add_edge(ring, e);
    }
    return lift.build();
}

} // namespace

MPGraph transform(const Graph& g, const Arch& arch) {
    switch (arch.kind) {
        case ArchKind::Mlp:
            return LiftBuilder(g, false).build();
        case ArchKind::Standard:
            return LiftBuilder(g, true).build();
        case ArchKind::VirtualNode: {
            LiftBuilder lift(g, true);
            const NodeId vn = lift.add_node(Role::Virtual, Feature{kSentinelLabel}, {});
            for (NodeId v = 0; v < g.node_count(); ++v) lift.add_edge(vn, v);
            return lift.build();
        }
        case ArchKind::Gsn:
        case ArchKind::FragNet:
        case ArchKind::Cin: {
            if (arch.max_cycle < 3)
                raise(ErrorCode::InvalidParameters, "max_cycle must be >= 3");
            if (arch.kind == ArchKind::Gsn) return transform_gsn(g, arch.max_cycle);
            if (arch.kind == ArchKind::FragNet) return transform_fragnet(g, arch.max_cycle);
            return transform_cin(g, arch.max_cycle);
        }
    }
    raise(ErrorCode::InvalidParameters, "unknown architecture");
}

MPGraph add_readout(MPGraph mpg, std::int64_t layers) {
    if (layers < 0) raise(ErrorCode::InvalidParameters, "negative layer count");
    const std::int64_t old_n = mpg.graph.node_count();
    Graph next(old_n + 1);
    for (const auto& [a, b] : mpg.graph.edges()) next.add_edge(a, b);
    for (NodeId v = 0; v < old_n; ++v) next.set_feature(v, mpg.graph.feature(v));
    const NodeId ro = old_n;
    next.set_feature(ro, Feature{kSentinelLabel});
    for (NodeId v = 0; v < old_n; ++v) {
        next.add_edge(ro, v);
        mpg.edge_masks[{v, ro}] = {layers + 1};
    }
    mpg.graph = std::move(next);
    mpg.roles.push_back(Role::Readout);
    mpg.provenance.push_back({});
    return mpg;
}

InfluenceModel mp_influence(const MPGraph& mpg) {
    return influence_matrix(mpg.graph);
}

} // namespace mpcx
