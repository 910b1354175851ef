#pragma once

#include <map>
#include <string>
#include <vector>

#include "topols/circuit.hpp"
#include "topols/zx.hpp"

namespace topols::schedule {

struct PartitionConfig {
    enum class Mode { TopologyAware, Uniform, None };
    Mode mode = Mode::TopologyAware;
    int threshold = 0;       // routing-frontier cap; <= 0 means "number of qubits"
    int uniform_stride = 5;  // Uniform mode: cut every this many circuit depths
};

struct LayerInfo {
    std::vector<int> spiders;      // node ids, ascending
    std::vector<int> input_edges;  // edge indices arriving from layer k-1 or input boundaries
    std::vector<int> output_edges; // edge indices leaving to layer k+1
    std::vector<int> inner_edges;  // edge indices within the layer
    int frontier_size = 0;         // |S_k|: spiders with outgoing connections
};

// Layer assignment for a fused diagram. Layers are 1-based and contiguous
// within each block. A spider's "outgoing connections" are its edges to the
// next layer plus, before the final layer, edges to output boundaries (the
// wire has to ride the frontier either way).
struct SliceSchedule {
    zx::ZxDiagram diagram;
    std::map<int, int> layer_of;
    std::vector<LayerInfo> layers;               // layers[k] describes layer k+1
    std::vector<std::pair<int, int>> blocks;     // (first_layer, last_layer)
    std::vector<std::string> warnings;

    int num_layers() const { return static_cast<int>(layers.size()); }
    int max_frontier() const;
};

// Breadth-first slicing: spiders adjacent to input boundaries form layer 1,
// every later spider gets its discoverer's layer + 1. Degree-1 phase spiders
// act as primitives and receive no layer; nodes unreachable from the inputs
// are reported and layered by a secondary pass from the outputs.
SliceSchedule slice_layers(const zx::ZxDiagram& g);

// Translates, fuses and slices the circuit block-wise. Topology-aware mode
// grows each block from depth 2 while every layer's frontier stays within
// the threshold and finalizes at the last passing depth; uniform mode cuts
// at fixed strides; none compiles a single block. Idle spiders are inserted
// wherever block seams leave neighboring spiders more than one layer apart.
SliceSchedule partition_program(const circuit::Circuit& c, const PartitionConfig& cfg);

}  // namespace topols::schedule
