#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topols/geometry.hpp"
#include "topols/zx.hpp"

namespace topols::pipe {

enum class CubeKind : uint8_t { Standard, Hadamard, YCap, InjectionPort, BoundaryPort };

std::string kind_name(CubeKind k);

// One lattice cell of the space-time diagram. Standard cubes carry an
// orientation (the axis pipes may not attach along) and the color shown on
// the faces normal to that axis; other kinds carry neither.
struct Cube {
    int id = -1;
    Vec3 pos;
    CubeKind kind = CubeKind::Standard;
    Axis orientation = Axis::X;   // Standard only
    PatchColor color = PatchColor::Blue;  // Standard only
    double angle = 0.0;           // InjectionPort only
};

// Unit segment between two adjacent cubes. blue/red are the axes normal to
// the pipe's blue and red boundary faces; {dir, blue, red} is a permutation
// of the three axes.
struct Pipe {
    int a = -1;
    int b = -1;
    Axis dir = Axis::Z;
    Axis blue = Axis::X;

    Axis red() const { return third_axis(dir, blue); }
    PipeFrame frame() const { return PipeFrame{dir, blue}; }
    PatchColor color_along(Axis ax) const { return ax == blue ? PatchColor::Blue : PatchColor::Red; }
};

struct Violation {
    std::string rule;      // direction | color | hadamard | cap | port | geometry
    std::string message;
    std::vector<int> cubes;
    std::vector<int> pipes;
};

struct PipeDiagram {
    std::vector<Cube> cubes;   // sorted by id
    std::vector<Pipe> pipes;
    std::vector<int> input_ports;   // cube ids, qubit order
    std::vector<int> output_ports;
    int next_cube_id = 0;

    int add_cube(Cube c);  // assigns id, keeps cubes sorted by id
    void add_pipe(int a, int b, Axis blue);

    const Cube* find_cube(int id) const;
    Cube* find_cube(int id);
    std::vector<int> pipes_at(int cube_id) const;  // pipe indices
};

// Checks the direction, color-consistency, Hadamard, cap/port degree and
// geometric constraints; an empty result means the diagram is valid.
std::vector<Violation> validate_pipe_diagram(const PipeDiagram& p);

// Bounding-box product over all cube positions; 0 for an empty diagram.
long long space_time_volume(const PipeDiagram& p);

// Temporal extent (z span) of the bounding box; 0 for an empty diagram.
int time_steps(const PipeDiagram& p);

// The pipe-to-ZX reading: standard cubes become spiders (blue -> Z,
// red -> X), Hadamard cubes become boxes, caps become single-wire phase
// spiders, boundary ports become boundary nodes, pipes become edges.
// A cube id listed in input/output_ports that is a Standard cube gets a
// fresh boundary node wired to its spider (a bare worldline end face).
// Degree-2 phase-0 spiders are then eliminated. Throws if p is invalid.
zx::ZxDiagram interpret_pipe_as_zx(const PipeDiagram& p);

// Wavefront OBJ export (with a sibling .mtl) for external 3D viewers.
std::string to_mesh_obj(const PipeDiagram& p, const std::string& mtl_filename);
std::string mesh_mtl();

}  // namespace topols::pipe
