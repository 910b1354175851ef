#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "topols/circuit.hpp"
#include "topols/pipe.hpp"
#include "topols/schedule.hpp"

namespace topols::embed {

struct CompileConfig {
    int grid_cols = 1;
    int grid_rows = 1;
    // Optional explicit data-patch anchors, one (x, y) per qubit. When empty,
    // qubit q anchors at (2*(q % cols), 2*(q / cols)); odd coordinates are
    // routing channels.
    std::vector<std::pair<int, int>> anchors;

    bool placement_opt = true;
    schedule::PartitionConfig partition;
    int iterations = 1000;
    int timeout_ms = 2000;      // per search seed; 0 disables the clock
    int seeds_per_layer = 2;
    double exploration_c = std::sqrt(2.0);
    uint64_t rng_seed = 0;

    int footprint_width() const;
    int footprint_height() const;
    std::pair<int, int> anchor_of(int qubit) const;
    int capacity() const { return grid_cols * grid_rows; }
};

// Pipe diagram under construction: occupancy, per-cube face usage, the
// spider correspondence phi, and the frontier access points for routing.
struct EmbeddingState {
    pipe::PipeDiagram diagram;
    int width = 0;
    int height = 0;
    int max_z = 0;
    std::unordered_map<int64_t, int> occupied;  // packed cell -> cube id
    std::unordered_map<int, uint8_t> faces;     // cube id -> used-face bitmask
    std::map<int, int> phi;                     // junction cube id -> spider id
    std::map<int, std::vector<int>> group;      // zx node id -> cubes accepting its connections
    std::set<int> realized_edges;               // edge indices already routed

    bool in_bounds(const Vec3& p, int z_cap) const {
        return p.x >= 0 && p.x < width && p.y >= 0 && p.y < height && p.z >= 0 && p.z <= z_cap;
    }
    int cube_at(const Vec3& p) const {
        auto it = occupied.find(pack_cell(p));
        return it == occupied.end() ? -1 : it->second;
    }
    bool vacant(const Vec3& p) const { return cube_at(p) < 0; }

    static int face_index(Axis a, int sign) { return static_cast<int>(a) * 2 + (sign > 0 ? 0 : 1); }
    bool face_used(int cube, Axis a, int sign) const {
        auto it = faces.find(cube);
        return it != faces.end() && (it->second >> face_index(a, sign)) & 1;
    }

    int place_cube(pipe::Cube c);                        // registers occupancy
    void connect(int a, int b, Axis blue);               // adjacent cubes; marks faces
    int access_cube(int node) const;                     // last cube of the node's group
    long long volume() const { return pipe::space_time_volume(diagram); }
};

// Frame-aware shortest-path routing over (cell, travel axis, blue axis)
// states. Straight moves keep the frame, corners transport it, so color
// switches appear as staircase detours wherever the endpoint frames
// disagree. Routes claim the cells they pass through as pass-through cubes.
// On success the route is applied to the state and true is returned; on
// failure the state is untouched.
bool route_connection(EmbeddingState& st, int from_cube, int to_cube, int z_cap,
                      int* pipes_added = nullptr);

// Routes an edge of the diagram from a fresh cube toward the target node's
// group, extending the target with a same-color twin cube when saturated.
bool route_edge_to_node(EmbeddingState& st, const zx::ZxDiagram& g, int from_cube, int to_node,
                        int z_cap);

struct MctsNode {
    int parent = -1;
    int depth = 0;                  // spiders embedded along the path to here
    int action_spider = -1;
    Vec3 action_cell;
    double reward_sum = 0.0;
    int visits = 0;
    bool dead = false;
    bool exhausted = false;
    bool enumerated = false;
    std::vector<Vec3> candidates;   // untried placement cells
    size_t next_candidate = 0;
    std::vector<int> children;
};

// UCT(i) = R_i/N_i + c*sqrt(ln N_p / N_i); unvisited nodes score +infinity.
double uct_score(double reward_sum, int visits, int parent_visits, double c);
double uct_score(const MctsNode& node, int parent_visits, double c);

struct LayerStats {
    int layer = 0;
    int spiders = 0;
    int placeholders = 0;       // |S_k|
    bool fallback = false;
    int chosen_seed = -1;
    int iterations_run = 0;
    long long volume_after = 0;
    bool best_monotone = true;  // best reward never worsened over iterations
};

struct CompileResult {
    pipe::PipeDiagram diagram;
    long long volume = 0;
    int time_steps_total = 0;
    int comp_steps = 0;         // z extent of non-port cubes
    double compile_ms = 0.0;
    std::vector<LayerStats> layer_stats;
    std::vector<int> fallback_layers;
    std::vector<std::string> warnings;
};

// Layer-by-layer MCTS embedding of the partitioned, fused, sliced program.
// Boundary ports occupy the first and last time planes.
CompileResult compile_full(const circuit::Circuit& c, const CompileConfig& cfg);

// Gate-by-gate sequential compilation: every CNOT takes the fixed two-step
// merge-split window, every other structural gate a one-step window; all
// other qubits idle through each window. Ports are the bare worldline ends.
CompileResult compile_baseline(const circuit::Circuit& c, const CompileConfig& cfg);

// Exposed for tests and the per-layer driver.
struct LayerTask {
    int layer = 0;
    std::vector<int> search_spiders;  // embedded through MCTS, in schedule order
    std::vector<int> lift_spiders;    // idle riders placed by the lift rule
};

struct LayerOutcome {
    bool ok = false;
    EmbeddingState state;
    int chosen_seed = -1;
    int iterations_run = 0;
    bool best_monotone = true;
};

LayerTask make_layer_task(const schedule::SliceSchedule& s, int layer);

LayerOutcome embed_layer_mcts(const EmbeddingState& start, const schedule::SliceSchedule& s,
                              const LayerTask& task, const CompileConfig& cfg);

// Deterministic completion of one layer: places every remaining spider above
// its first embedded neighbor and finishes the frontier lift. Returns the
// reward (negative volume) or -infinity on failure; used as the MCTS rollout.
double rollout_layer(EmbeddingState& st, const schedule::SliceSchedule& s, const LayerTask& task,
                     size_t from_index, const std::vector<int>& order, const CompileConfig& cfg);

// Placement candidates for one spider; empty means the expansion is
// infeasible from this state.
std::vector<Vec3> placement_candidates(const EmbeddingState& st, const zx::ZxDiagram& g,
                                       int spider, bool placement_opt, int z_cap);

// Places the spider at the cell and routes its connections to every already
// embedded endpoint; false leaves the state untouched.
bool apply_placement(EmbeddingState& st, const schedule::SliceSchedule& s, int spider, Vec3 cell,
                     int z_cap);

// Frontier maintenance after a layer: placeholder ports for spiders with
// outgoing connections, idle-rider placement, and pending-wire lifts.
bool lift_frontier(EmbeddingState& st, const schedule::SliceSchedule& s, int layer,
                   const LayerTask& task);

}  // namespace topols::embed
