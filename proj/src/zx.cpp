#include "topols/zx.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace topols::zx {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kPhaseTol = 1e-12;
}  // namespace

double normalize_phase(double phase) {
    double p = std::fmod(phase, kTwoPi);
    if (p < 0) p += kTwoPi;
    if (p < kPhaseTol || kTwoPi - p < kPhaseTol) p = 0.0;
    return p;
}

int ZxDiagram::add_node(NodeKind kind, double phase, int home_qubit) {
    int id = next_id++;
    nodes[id] = ZxNode{kind, is_spider(kind) ? normalize_phase(phase) : 0.0, home_qubit};
    return id;
}

void ZxDiagram::add_edge(int a, int b) {
    if (a == b) throw std::logic_error("self-loop edge");
    edges.emplace_back(std::min(a, b), std::max(a, b));
}

int ZxDiagram::degree(int id) const {
    int d = 0;
    for (const auto& [a, b] : edges) d += (a == id) + (b == id);
    return d;
}

std::vector<int> ZxDiagram::neighbors(int id) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == id) out.push_back(b);
        if (b == id) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ZxDiagram::incident_edges(int id) const {
    std::vector<int> out;
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].first == id || edges[i].second == id) out.push_back(static_cast<int>(i));
    return out;
}

int ZxDiagram::spider_count() const {
    int n = 0;
    for (const auto& [id, node] : nodes) n += is_spider(node.kind);
    return n;
}

void ZxDiagram::check() const {
    for (const auto& [a, b] : edges) {
        if (a == b) throw std::logic_error("self-loop edge");
        if (!nodes.count(a) || !nodes.count(b)) throw std::logic_error("edge references missing node");
    }
    for (const auto& [id, node] : nodes) {
        if (node.kind == NodeKind::Boundary && degree(id) != 1)
            throw std::logic_error("boundary node " + std::to_string(id) + " must have degree 1");
        if (node.kind == NodeKind::HBox && degree(id) != 2)
            throw std::logic_error("Hadamard box " + std::to_string(id) + " must have degree 2");
    }
    std::vector<int> seen;
    for (int id : inputs) seen.push_back(id);
    for (int id : outputs) seen.push_back(id);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::logic_error("node listed twice across inputs/outputs");
    for (int id : seen)
        if (!nodes.count(id) || nodes.at(id).kind != NodeKind::Boundary)
            throw std::logic_error("input/output list entry is not a boundary node");
    int boundaries = 0;
    for (const auto& [id, node] : nodes) boundaries += node.kind == NodeKind::Boundary;
    if (boundaries != static_cast<int>(seen.size()))
        throw std::logic_error("boundary node missing from inputs/outputs");
}

ZxDiagram circuit_to_zx(const circuit::Circuit& c) {
    circuit::check_circuit(c);
    ZxDiagram g;
    std::vector<int> frontier(c.num_qubits);
    for (int q = 0; q < c.num_qubits; ++q) {
        int in = g.add_node(NodeKind::Boundary, 0.0, q);
        g.inputs.push_back(in);
        frontier[q] = in;
    }
    auto extend = [&](int q, NodeKind kind, double phase) {
        int n = g.add_node(kind, phase, q);
        g.add_edge(frontier[q], n);
        frontier[q] = n;
        return n;
    };
    using circuit::GateKind;
    for (const auto& gate : c.gates) {
        switch (gate.kind) {
            case GateKind::H: extend(gate.qubits[0], NodeKind::HBox, 0.0); break;
            case GateKind::S: extend(gate.qubits[0], NodeKind::ZSpider, M_PI / 2); break;
            case GateKind::T: extend(gate.qubits[0], NodeKind::ZSpider, M_PI / 4); break;
            case GateKind::Rz: extend(gate.qubits[0], NodeKind::ZSpider, gate.angle); break;
            case GateKind::Z: extend(gate.qubits[0], NodeKind::ZSpider, M_PI); break;
            case GateKind::X: extend(gate.qubits[0], NodeKind::XSpider, M_PI); break;
            case GateKind::CNOT: {
                int zc = extend(gate.qubits[0], NodeKind::ZSpider, 0.0);
                int xt = extend(gate.qubits[1], NodeKind::XSpider, 0.0);
                g.add_edge(zc, xt);
                break;
            }
        }
    }
    for (int q = 0; q < c.num_qubits; ++q) {
        int out = g.add_node(NodeKind::Boundary, 0.0, q);
        g.outputs.push_back(out);
        g.add_edge(frontier[q], out);
    }
    g.check();
    return g;
}

namespace {

// Merge node b into node a: edges to b are rewired to a, the a-b edges drop.
void merge_into(ZxDiagram& g, int a, int b) {
    std::vector<std::pair<int, int>> kept;
    kept.reserve(g.edges.size());
    for (auto [u, v] : g.edges) {
        if ((u == a && v == b) || (u == b && v == a)) continue;
        if (u == b) u = a;
        if (v == b) v = a;
        kept.emplace_back(std::min(u, v), std::max(u, v));
    }
    g.edges = std::move(kept);
    g.nodes.erase(b);
}

// One fusion pass; returns true if a rewrite was applied.
bool try_fuse_step(ZxDiagram& g, int max_degree, FusionStats& stats) {
    // scan edges ordered by (min id, max id)
    std::vector<std::pair<int, int>> order(g.edges.begin(), g.edges.end());
    std::sort(order.begin(), order.end());
    for (auto [a, b] : order) {
        const ZxNode& na = g.nodes.at(a);
        const ZxNode& nb = g.nodes.at(b);
        if (!is_spider(na.kind) || na.kind != nb.kind) continue;
        // parallel edges would become self-loops; skip those pairs
        int multiplicity = 0;
        for (const auto& [u, v] : g.edges) multiplicity += (u == a && v == b);
        if (multiplicity != 1) continue;
        int merged_degree = g.degree(a) + g.degree(b) - 2;
        if (merged_degree > max_degree) continue;
        ZxNode merged = na;
        merged.phase = normalize_phase(na.phase + nb.phase);
        if (merged.home_qubit < 0) merged.home_qubit = nb.home_qubit;
        merge_into(g, a, b);
        g.nodes.at(a) = merged;
        (na.kind == NodeKind::ZSpider ? stats.z_fusions : stats.x_fusions)++;
        return true;
    }
    return false;
}

bool try_identity_step(ZxDiagram& g, FusionStats& stats) {
    for (const auto& [id, node] : g.nodes) {
        if (!is_spider(node.kind) || node.phase != 0.0) continue;
        auto nbrs = g.neighbors(id);
        if (nbrs.size() != 2) continue;
        if (nbrs[0] == nbrs[1]) continue;  // removing it would create a self-loop
        int u = nbrs[0], v = nbrs[1];
        std::vector<std::pair<int, int>> kept;
        kept.reserve(g.edges.size());
        for (auto [a, b] : g.edges)
            if (a != id && b != id) kept.emplace_back(a, b);
        kept.emplace_back(std::min(u, v), std::max(u, v));
        g.edges = std::move(kept);
        g.nodes.erase(id);
        stats.identities_removed++;
        return true;
    }
    return false;
}

}  // namespace

ZxDiagram fuse_all(const ZxDiagram& g, int max_degree, FusionStats& stats) {
    ZxDiagram out = g;
    for (;;) {
        if (try_fuse_step(out, max_degree, stats)) continue;
        if (try_identity_step(out, stats)) continue;
        break;
    }
    out.check();
    return out;
}

ZxDiagram fuse_all(const ZxDiagram& g, int max_degree) {
    FusionStats stats;
    return fuse_all(g, max_degree, stats);
}

ZxDiagram remove_identities(const ZxDiagram& g) {
    ZxDiagram out = g;
    FusionStats stats;
    while (try_identity_step(out, stats)) {
    }
    out.check();
    return out;
}

bool same_structure(const ZxDiagram& a, const ZxDiagram& b) {
    if (a.inputs != b.inputs || a.outputs != b.outputs) return false;
    if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
    for (const auto& [id, node] : a.nodes) {
        auto it = b.nodes.find(id);
        if (it == b.nodes.end()) return false;
        if (it->second.kind != node.kind || it->second.phase != node.phase) return false;
    }
    auto ea = a.edges, eb = b.edges;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

std::string to_json(const ZxDiagram& g) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const auto& [id, node] : g.nodes) {
        nlohmann::json n;
        n["id"] = id;
        switch (node.kind) {
            case NodeKind::ZSpider: n["kind"] = "z"; break;
            case NodeKind::XSpider: n["kind"] = "x"; break;
            case NodeKind::HBox: n["kind"] = "h"; break;
            case NodeKind::Boundary: n["kind"] = "boundary"; break;
        }
        if (is_spider(node.kind)) n["phase"] = node.phase;
        j["nodes"].push_back(n);
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
    j["inputs"] = g.inputs;
    j["outputs"] = g.outputs;
    return j.dump(2);
}

}  // namespace topols::zx
