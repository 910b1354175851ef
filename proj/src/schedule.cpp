#include "topols/schedule.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace topols::schedule {

namespace {

bool is_layerable(const zx::ZxDiagram& g, int id) {
    const zx::ZxNode& n = g.nodes.at(id);
    if (n.kind == zx::NodeKind::Boundary) return false;
    if (zx::is_spider(n.kind) && g.degree(id) <= 1) return false;  // gate primitive
    return true;
}

void bfs_assign(const zx::ZxDiagram& g, std::deque<int>& queue, std::map<int, int>& layer) {
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        int next_layer = layer.at(cur) + 1;
        for (int nb : g.neighbors(cur)) {
            if (layer.count(nb) || !is_layerable(g, nb)) continue;
            layer[nb] = next_layer;
            queue.push_back(nb);
        }
    }
}

}  // namespace

int SliceSchedule::max_frontier() const {
    int m = 0;
    for (const auto& l : layers) m = std::max(m, l.frontier_size);
    return m;
}

SliceSchedule slice_layers(const zx::ZxDiagram& g) {
    g.check();
    SliceSchedule s;
    s.diagram = g;

    std::set<int> input_adjacent;
    for (int b : g.inputs)
        for (int nb : g.neighbors(b))
            if (is_layerable(g, nb)) input_adjacent.insert(nb);

    std::deque<int> queue;
    for (int id : input_adjacent) {  // std::set iterates in id order
        s.layer_of[id] = 1;
        queue.push_back(id);
    }
    bfs_assign(g, queue, s.layer_of);

    // secondary pass for nodes unreachable from any input
    std::set<int> output_adjacent;
    for (int b : g.outputs)
        for (int nb : g.neighbors(b))
            if (is_layerable(g, nb) && !s.layer_of.count(nb)) output_adjacent.insert(nb);
    if (!output_adjacent.empty()) {
        s.warnings.push_back("diagram has spiders unreachable from the inputs; layered from the outputs");
        for (int id : output_adjacent) {
            s.layer_of[id] = 1;
            queue.push_back(id);
        }
        bfs_assign(g, queue, s.layer_of);
    }
    for (const auto& [id, node] : g.nodes) {
        if (!is_layerable(g, id) || s.layer_of.count(id)) continue;
        s.warnings.push_back("spider " + std::to_string(id) +
                             " is disconnected from all boundaries; assigned layer 1");
        s.layer_of[id] = 1;
        queue.push_back(id);
        bfs_assign(g, queue, s.layer_of);
    }

    int max_layer = 0;
    for (const auto& [id, l] : s.layer_of) max_layer = std::max(max_layer, l);
    s.layers.resize(max_layer);
    for (const auto& [id, l] : s.layer_of) s.layers[l - 1].spiders.push_back(id);
    for (auto& info : s.layers) std::sort(info.spiders.begin(), info.spiders.end());

    std::set<int> boundary_inputs(g.inputs.begin(), g.inputs.end());
    std::set<int> boundary_outputs(g.outputs.begin(), g.outputs.end());
    std::set<int> frontier_members;

    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        bool la = s.layer_of.count(a), lb = s.layer_of.count(b);
        if (la && lb) {
            int da = s.layer_of.at(a), db = s.layer_of.at(b);
            if (da == db) {
                s.layers[da - 1].inner_edges.push_back(static_cast<int>(e));
            } else {
                if (std::abs(da - db) > 1)
                    s.warnings.push_back("edge spans more than one layer (" + std::to_string(a) +
                                         "," + std::to_string(b) + ")");
                int lo = std::min(da, db), hi = std::max(da, db);
                s.layers[lo - 1].output_edges.push_back(static_cast<int>(e));
                s.layers[hi - 1].input_edges.push_back(static_cast<int>(e));
                frontier_members.insert(da < db ? a : b);
            }
        } else if (la || lb) {
            int spider = la ? a : b;
            int boundary = la ? b : a;
            int layer = s.layer_of.at(spider);
            if (boundary_inputs.count(boundary)) {
                s.layers[layer - 1].input_edges.push_back(static_cast<int>(e));
            } else if (layer < max_layer) {
                // a wire bound for the outputs keeps riding the frontier
                frontier_members.insert(spider);
            }
        }
    }
    for (int id : frontier_members) s.layers[s.layer_of.at(id) - 1].frontier_size++;

    if (max_layer > 0) s.blocks.push_back({1, max_layer});
    return s;
}

namespace {

// depth index (1-based) of every gate under as-soon-as-possible layering
std::vector<int> gate_depths(const circuit::Circuit& c) {
    std::vector<int> level(c.num_qubits, 0), out;
    out.reserve(c.gates.size());
    for (const auto& g : c.gates) {
        int at = 0;
        for (int q : g.qubits) at = std::max(at, level[q]);
        ++at;
        for (int q : g.qubits) level[q] = at;
        out.push_back(at);
    }
    return out;
}

circuit::Circuit subcircuit(const circuit::Circuit& c, const std::vector<int>& depths,
                            int depth_lo, int depth_hi) {
    circuit::Circuit out;
    out.num_qubits = c.num_qubits;
    for (size_t i = 0; i < c.gates.size(); ++i)
        if (depths[i] >= depth_lo && depths[i] <= depth_hi) out.gates.push_back(c.gates[i]);
    return out;
}

// Frontier check used while growing a block: every layer's |S_i| must stay
// within the threshold, counting wires that leave through the block's
// output boundary (they occupy frontier ports just the same).
bool block_within_threshold(const circuit::Circuit& block, int threshold, int* worst = nullptr) {
    zx::ZxDiagram fused = zx::fuse_all(zx::circuit_to_zx(block));
    SliceSchedule s = slice_layers(fused);
    std::set<int> outputs(fused.outputs.begin(), fused.outputs.end());
    int max_frontier = 0;
    for (int k = 1; k <= s.num_layers(); ++k) {
        std::set<int> members;
        for (size_t e = 0; e < fused.edges.size(); ++e) {
            auto [a, b] = fused.edges[e];
            bool la = s.layer_of.count(a) && s.layer_of.at(a) == k;
            bool lb = s.layer_of.count(b) && s.layer_of.at(b) == k;
            if (la && s.layer_of.count(b) && s.layer_of.at(b) == k + 1) members.insert(a);
            if (lb && s.layer_of.count(a) && s.layer_of.at(a) == k + 1) members.insert(b);
            if (la && outputs.count(b)) members.insert(a);
            if (lb && outputs.count(a)) members.insert(b);
        }
        max_frontier = std::max(max_frontier, static_cast<int>(members.size()));
    }
    if (worst) *worst = max_frontier;
    return max_frontier <= threshold;
}

struct Assembler {
    zx::ZxDiagram out;
    std::vector<int> attach;  // per qubit: node id the wire currently ends at
    std::map<int, int> layer_of;
    int max_layer = 0;
    std::vector<std::pair<int, int>> blocks;

    explicit Assembler(int qubits) {
        for (int q = 0; q < qubits; ++q) {
            int in = out.add_node(zx::NodeKind::Boundary, 0.0, q);
            out.inputs.push_back(in);
            attach.push_back(in);
        }
    }

    void add_block(const zx::ZxDiagram& g, const SliceSchedule& sliced) {
        int base = max_layer;
        std::map<int, int> remap;
        for (const auto& [id, node] : g.nodes) {
            if (node.kind == zx::NodeKind::Boundary) continue;
            remap[id] = out.add_node(node.kind, node.phase, node.home_qubit);
            if (sliced.layer_of.count(id)) layer_of[remap[id]] = base + sliced.layer_of.at(id);
        }
        std::set<int> boundary(g.inputs.begin(), g.inputs.end());
        boundary.insert(g.outputs.begin(), g.outputs.end());
        for (const auto& [a, b] : g.edges)
            if (!boundary.count(a) && !boundary.count(b)) out.add_edge(remap.at(a), remap.at(b));

        // stitch qubit wires: block input q attaches to the current wire end
        for (size_t q = 0; q < g.inputs.size(); ++q) {
            int bin = g.inputs[q];
            int bout = g.outputs[q];
            auto in_nbrs = g.neighbors(bin);
            int w = in_nbrs.at(0);
            if (w == bout) continue;  // untouched wire passes through this block
            out.add_edge(attach[q], remap.at(w));
            attach[q] = remap.at(g.neighbors(bout).at(0));
        }
        int block_layers = sliced.num_layers();
        if (block_layers > 0) {
            blocks.push_back({base + 1, base + block_layers});
            max_layer = base + block_layers;
        }
    }

    // Bridge layer gaps with degree-2 phase-0 idle spiders; input boundaries
    // count as layer 0.
    void insert_idles() {
        for (;;) {
            bool changed = false;
            std::set<int> ins(out.inputs.begin(), out.inputs.end());
            for (size_t e = 0; e < out.edges.size() && !changed; ++e) {
                auto [a, b] = out.edges[e];
                int la = ins.count(a) ? 0 : (layer_of.count(a) ? layer_of.at(a) : -1);
                int lb = ins.count(b) ? 0 : (layer_of.count(b) ? layer_of.at(b) : -1);
                if (la < 0 || lb < 0 || std::abs(la - lb) <= 1) continue;
                int lower = la < lb ? a : b;
                int upper = la < lb ? b : a;
                int home = out.nodes.at(upper).home_qubit;
                if (home < 0) home = out.nodes.at(lower).home_qubit;
                int idle = out.add_node(zx::NodeKind::ZSpider, 0.0, home);
                layer_of[idle] = std::min(la, lb) + 1;
                out.edges.erase(out.edges.begin() + static_cast<long>(e));
                out.add_edge(lower, idle);
                out.add_edge(idle, upper);
                changed = true;
            }
            if (!changed) break;
        }
    }

    void finish() {
        for (size_t q = 0; q < attach.size(); ++q) {
            int b = out.add_node(zx::NodeKind::Boundary, 0.0, static_cast<int>(q));
            out.outputs.push_back(b);
            out.add_edge(attach[q], b);
        }
    }
};

}  // namespace

SliceSchedule partition_program(const circuit::Circuit& c, const PartitionConfig& cfg) {
    circuit::check_circuit(c);
    if (cfg.threshold < 0) throw std::invalid_argument("partition threshold must be at least 1");
    int threshold = cfg.threshold > 0 ? cfg.threshold : c.num_qubits;  // 0 = qubit count

    if (cfg.mode == PartitionConfig::Mode::None) {
        SliceSchedule s = slice_layers(zx::fuse_all(zx::circuit_to_zx(c)));
        return s;
    }

    std::vector<int> depths = gate_depths(c);
    int total_depth = circuit::depth(c);
    std::vector<std::string> warnings;

    std::vector<std::pair<int, int>> spans;  // inclusive depth ranges
    if (cfg.mode == PartitionConfig::Mode::Uniform) {
        if (cfg.uniform_stride < 1) throw std::invalid_argument("uniform stride must be at least 1");
        for (int lo = 1; lo <= total_depth; lo += cfg.uniform_stride)
            spans.push_back({lo, std::min(total_depth, lo + cfg.uniform_stride - 1)});
    } else {
        int lo = 1;
        while (lo <= total_depth) {
            int hi = std::min(total_depth, lo + 1);  // growth starts at depth 2
            if (!block_within_threshold(subcircuit(c, depths, lo, hi), threshold)) {
                int worst = 0;
                hi = lo;  // finalize at the preceding circuit depth
                if (!block_within_threshold(subcircuit(c, depths, lo, hi), threshold, &worst))
                    warnings.push_back("single-depth block at depth " + std::to_string(lo) +
                                       " has frontier " + std::to_string(worst) +
                                       " above threshold " + std::to_string(threshold));
            } else {
                while (hi < total_depth &&
                       block_within_threshold(subcircuit(c, depths, lo, hi + 1), threshold))
                    ++hi;
            }
            spans.push_back({lo, hi});
            lo = hi + 1;
        }
    }
    if (spans.empty()) spans.push_back({1, std::max(total_depth, 1)});

    Assembler asml(c.num_qubits);
    for (auto [lo, hi] : spans) {
        zx::ZxDiagram fused = zx::fuse_all(zx::circuit_to_zx(subcircuit(c, depths, lo, hi)));
        SliceSchedule sliced = slice_layers(fused);
        for (const auto& w : sliced.warnings) warnings.push_back(w);
        asml.add_block(fused, sliced);
    }
    asml.insert_idles();
    asml.finish();
    asml.out.check();

    // rebuild per-layer info on the assembled diagram
    SliceSchedule s;
    s.diagram = asml.out;
    s.layer_of = asml.layer_of;
    s.warnings = std::move(warnings);
    s.blocks = asml.blocks;
    int max_layer = asml.max_layer;
    if (max_layer == 0) max_layer = 0;
    s.layers.resize(max_layer);
    for (const auto& [id, l] : s.layer_of) s.layers[l - 1].spiders.push_back(id);
    for (auto& info : s.layers) std::sort(info.spiders.begin(), info.spiders.end());

    std::set<int> ins(s.diagram.inputs.begin(), s.diagram.inputs.end());
    std::set<int> outs(s.diagram.outputs.begin(), s.diagram.outputs.end());
    std::set<int> frontier_members;
    for (size_t e = 0; e < s.diagram.edges.size(); ++e) {
        auto [a, b] = s.diagram.edges[e];
        bool la = s.layer_of.count(a), lb = s.layer_of.count(b);
        if (la && lb) {
            int da = s.layer_of.at(a), db = s.layer_of.at(b);
            if (da == db) {
                s.layers[da - 1].inner_edges.push_back(static_cast<int>(e));
            } else {
                int lo = std::min(da, db), hi = std::max(da, db);
                s.layers[lo - 1].output_edges.push_back(static_cast<int>(e));
                s.layers[hi - 1].input_edges.push_back(static_cast<int>(e));
                frontier_members.insert(da < db ? a : b);
            }
        } else if (la || lb) {
            int spider = la ? a : b;
            int boundary = la ? b : a;
            int layer = s.layer_of.at(spider);
            if (ins.count(boundary))
                s.layers[layer - 1].input_edges.push_back(static_cast<int>(e));
            else if (outs.count(boundary) && layer < max_layer)
                frontier_members.insert(spider);
        }
    }
    for (int id : frontier_members) s.layers[s.layer_of.at(id) - 1].frontier_size++;
    return s;
}

}  // namespace topols::schedule
