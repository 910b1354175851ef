#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topols/circuit.hpp"

namespace topols::zx {

enum class NodeKind { ZSpider, XSpider, HBox, Boundary };

inline bool is_spider(NodeKind k) { return k == NodeKind::ZSpider || k == NodeKind::XSpider; }

// Phases are kept in [0, 2pi); values within 1e-12 of 0 or 2pi collapse to 0.
double normalize_phase(double phase);

struct ZxNode {
    NodeKind kind = NodeKind::ZSpider;
    double phase = 0.0;           // spiders only
    int home_qubit = -1;          // wire of origin; guides placement, -1 if unknown
};

// Undirected multigraph with stable node ids. Boundary nodes have degree 1,
// Hadamard boxes degree 2, no self-loops.
struct ZxDiagram {
    std::map<int, ZxNode> nodes;
    std::vector<std::pair<int, int>> edges;   // unordered pairs, multiset
    std::vector<int> inputs;                  // boundary node ids, qubit order
    std::vector<int> outputs;
    int next_id = 0;

    int add_node(NodeKind kind, double phase = 0.0, int home_qubit = -1);
    void add_edge(int a, int b);

    int degree(int id) const;
    std::vector<int> neighbors(int id) const;           // sorted, with multiplicity
    std::vector<int> incident_edges(int id) const;      // sorted edge indices

    bool is_boundary(int id) const { return nodes.at(id).kind == NodeKind::Boundary; }

    int spider_count() const;

    // Throws std::logic_error if a structural invariant is broken.
    void check() const;
};

// Gate-to-spider translation: one boundary input/output per qubit; H -> HBox,
// S/T/Rz -> Z spider with the phase, CNOT -> connected Z/X pair, X/Z -> Pauli
// phase spiders (software-tracked, removable by fusion).
ZxDiagram circuit_to_zx(const circuit::Circuit& c);

struct FusionStats {
    int z_fusions = 0;
    int x_fusions = 0;
    int identities_removed = 0;
};

// Repeatedly merges adjacent same-kind spiders (phases summed) while the
// merged degree stays <= max_degree, and removes degree-2 phase-0 spiders.
// Spiders joined by parallel edges are never merged (that would create a
// self-loop). Deterministic: lowest-id rewrite first, restart after each.
ZxDiagram fuse_all(const ZxDiagram& g, int max_degree = 4);
ZxDiagram fuse_all(const ZxDiagram& g, int max_degree, FusionStats& stats);

// Identity normalization only: drops degree-2 phase-0 spiders, leaving
// everything else untouched.
ZxDiagram remove_identities(const ZxDiagram& g);

// Structural equality including ids; used for idempotence checks.
bool same_structure(const ZxDiagram& a, const ZxDiagram& b);

// Debug dump (nodes/edges/boundaries) for the CLI --dump-zx flag.
std::string to_json(const ZxDiagram& g);

}  // namespace topols::zx
