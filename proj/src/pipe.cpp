#include "topols/pipe.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace topols::pipe {

std::string kind_name(CubeKind k) {
    switch (k) {
        case CubeKind::Standard: return "standard";
        case CubeKind::Hadamard: return "hadamard";
        case CubeKind::YCap: return "ycap";
        case CubeKind::InjectionPort: return "injection";
        case CubeKind::BoundaryPort: return "port";
    }
    return "?";
}

int PipeDiagram::add_cube(Cube c) {
    c.id = next_cube_id++;
    cubes.push_back(c);
    return c.id;
}

void PipeDiagram::add_pipe(int a, int b, Axis blue) {
    const Cube* ca = find_cube(a);
    const Cube* cb = find_cube(b);
    if (!ca || !cb) throw std::logic_error("pipe endpoint does not exist");
    if (!adjacent(ca->pos, cb->pos)) throw std::logic_error("pipe endpoints are not adjacent");
    Axis dir = adjacency_axis(ca->pos, cb->pos);
    if (blue == dir) throw std::logic_error("pipe blue orientation must be perpendicular");
    pipes.push_back(Pipe{a, b, dir, blue});
}

const Cube* PipeDiagram::find_cube(int id) const {
    auto it = std::lower_bound(cubes.begin(), cubes.end(), id,
                               [](const Cube& c, int v) { return c.id < v; });
    return (it != cubes.end() && it->id == id) ? &*it : nullptr;
}

Cube* PipeDiagram::find_cube(int id) {
    auto it = std::lower_bound(cubes.begin(), cubes.end(), id,
                               [](const Cube& c, int v) { return c.id < v; });
    return (it != cubes.end() && it->id == id) ? &*it : nullptr;
}

std::vector<int> PipeDiagram::pipes_at(int cube_id) const {
    std::vector<int> out;
    for (size_t i = 0; i < pipes.size(); ++i)
        if (pipes[i].a == cube_id || pipes[i].b == cube_id) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<Violation> validate_pipe_diagram(const PipeDiagram& p) {
    std::vector<Violation> out;
    auto add = [&](std::string rule, std::string msg, std::vector<int> cubes = {},
                   std::vector<int> pipes = {}) {
        out.push_back({std::move(rule), std::move(msg), std::move(cubes), std::move(pipes)});
    };

    std::map<Vec3, int> by_pos;
    for (const Cube& c : p.cubes) {
        auto [it, fresh] = by_pos.emplace(c.pos, c.id);
        if (!fresh) add("geometry", "two cubes share a position", {it->second, c.id});
    }

    std::set<std::pair<int, int>> seen_pairs;
    std::map<int, std::vector<int>> incident;
    for (size_t i = 0; i < p.pipes.size(); ++i) {
        const Pipe& e = p.pipes[i];
        const Cube* ca = p.find_cube(e.a);
        const Cube* cb = p.find_cube(e.b);
        if (!ca || !cb) {
            add("geometry", "pipe endpoint id does not exist", {}, {static_cast<int>(i)});
            continue;
        }
        if (!adjacent(ca->pos, cb->pos) || adjacency_axis(ca->pos, cb->pos) != e.dir) {
            add("geometry", "pipe endpoints are not unit-adjacent along its direction",
                {e.a, e.b}, {static_cast<int>(i)});
            continue;
        }
        if (e.blue == e.dir) {
            add("geometry", "pipe color orientations must be perpendicular to its direction",
                {e.a, e.b}, {static_cast<int>(i)});
            continue;
        }
        auto pair = std::minmax(e.a, e.b);
        if (!seen_pairs.emplace(pair.first, pair.second).second)
            add("geometry", "duplicate pipe between the same cube pair", {e.a, e.b},
                {static_cast<int>(i)});
        incident[e.a].push_back(static_cast<int>(i));
        incident[e.b].push_back(static_cast<int>(i));
    }

    for (const Cube& c : p.cubes) {
        const auto& inc = incident[c.id];
        switch (c.kind) {
            case CubeKind::Standard: {
                if (inc.size() > 4) add("direction", "junction has more than four ports", {c.id});
                for (int pi : inc) {
                    const Pipe& e = p.pipes[pi];
                    if (e.dir == c.orientation)
                        add("direction", "pipe attaches along the cube orientation axis", {c.id},
                            {pi});
                    else if (e.color_along(c.orientation) != c.color)
                        add("color",
                            "cube color differs from the pipe color along the cube orientation",
                            {c.id}, {pi});
                }
                break;
            }
            case CubeKind::Hadamard: {
                if (inc.size() != 2) {
                    add("hadamard", "Hadamard cube must have exactly two incident pipes", {c.id});
                    break;
                }
                const Pipe& e1 = p.pipes[inc[0]];
                const Pipe& e2 = p.pipes[inc[1]];
                for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
                    if (ax == e1.dir || ax == e2.dir) continue;
                    if (e1.color_along(ax) == e2.color_along(ax))
                        add("hadamard",
                            "Hadamard pipes must differ in color along the shared plane", {c.id},
                            {inc[0], inc[1]});
                }
                break;
            }
            case CubeKind::YCap:
            case CubeKind::InjectionPort:
                if (inc.size() != 1)
                    add("cap", kind_name(c.kind) + " cube must have exactly one incident pipe",
                        {c.id});
                break;
            case CubeKind::BoundaryPort:
                if (inc.size() != 1)
                    add("port", "boundary port must have exactly one incident pipe", {c.id});
                break;
        }
    }

    std::set<int> port_seen;
    for (const auto* list : {&p.input_ports, &p.output_ports}) {
        for (int id : *list) {
            const Cube* c = p.find_cube(id);
            if (!c) {
                add("port", "port list references a missing cube", {id});
                continue;
            }
            if (!port_seen.insert(id).second)
                add("port", "cube listed twice across port lists", {id});
            if (c->kind != CubeKind::BoundaryPort && c->kind != CubeKind::Standard)
                add("port", "port list entries must be boundary ports or worldline end cubes",
                    {id});
        }
    }
    for (const Cube& c : p.cubes)
        if (c.kind == CubeKind::BoundaryPort && !port_seen.count(c.id))
            add("port", "boundary port cube missing from the port lists", {c.id});

    return out;
}

long long space_time_volume(const PipeDiagram& p) {
    if (p.cubes.empty()) return 0;
    Vec3 lo = p.cubes.front().pos, hi = lo;
    for (const Cube& c : p.cubes) {
        lo.x = std::min(lo.x, c.pos.x);
        lo.y = std::min(lo.y, c.pos.y);
        lo.z = std::min(lo.z, c.pos.z);
        hi.x = std::max(hi.x, c.pos.x);
        hi.y = std::max(hi.y, c.pos.y);
        hi.z = std::max(hi.z, c.pos.z);
    }
    return static_cast<long long>(hi.x - lo.x + 1) * (hi.y - lo.y + 1) * (hi.z - lo.z + 1);
}

int time_steps(const PipeDiagram& p) {
    if (p.cubes.empty()) return 0;
    int lo = p.cubes.front().pos.z, hi = lo;
    for (const Cube& c : p.cubes) {
        lo = std::min(lo, c.pos.z);
        hi = std::max(hi, c.pos.z);
    }
    return hi - lo + 1;
}

zx::ZxDiagram interpret_pipe_as_zx(const PipeDiagram& p) {
    auto violations = validate_pipe_diagram(p);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "cannot interpret an invalid pipe diagram: " << violations.front().rule << ": "
           << violations.front().message;
        throw std::invalid_argument(os.str());
    }

    zx::ZxDiagram g;
    std::map<int, int> node_of;  // cube id -> node id
    for (const Cube& c : p.cubes) {
        switch (c.kind) {
            case CubeKind::Standard:
                node_of[c.id] = g.add_node(c.color == PatchColor::Blue ? zx::NodeKind::ZSpider
                                                                       : zx::NodeKind::XSpider);
                break;
            case CubeKind::Hadamard:
                node_of[c.id] = g.add_node(zx::NodeKind::HBox);
                break;
            case CubeKind::YCap:
                node_of[c.id] = g.add_node(zx::NodeKind::ZSpider, M_PI / 2);
                break;
            case CubeKind::InjectionPort:
                node_of[c.id] = g.add_node(zx::NodeKind::ZSpider, c.angle);
                break;
            case CubeKind::BoundaryPort:
                node_of[c.id] = g.add_node(zx::NodeKind::Boundary);
                break;
        }
    }
    for (const Pipe& e : p.pipes) g.add_edge(node_of.at(e.a), node_of.at(e.b));

    // Port-listed standard cubes expose a bare worldline end face as a wire.
    auto port_node = [&](int cube_id) {
        const Cube* c = p.find_cube(cube_id);
        if (c->kind == CubeKind::BoundaryPort) return node_of.at(cube_id);
        int b = g.add_node(zx::NodeKind::Boundary);
        g.add_edge(b, node_of.at(cube_id));
        return b;
    };
    for (int id : p.input_ports) g.inputs.push_back(port_node(id));
    for (int id : p.output_ports) g.outputs.push_back(port_node(id));

    g.check();
    return zx::remove_identities(g);
}

namespace {

void emit_prism(std::ostringstream& os, double cx, double cy, double cz, double hx, double hy,
                double hz, int& vbase) {
    const double offs[8][3] = {{-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
                               {-1, -1, 1},  {1, -1, 1},  {1, 1, 1},  {-1, 1, 1}};
    for (auto& o : offs)
        os << "v " << cx + hx * o[0] << " " << cy + hy * o[1] << " " << cz + hz * o[2] << "\n";
    const int faces[6][4] = {{0, 1, 2, 3}, {4, 7, 6, 5}, {0, 4, 5, 1},
                             {1, 5, 6, 2}, {2, 6, 7, 3}, {3, 7, 4, 0}};
    for (auto& f : faces) {
        os << "f " << vbase + f[0] << " " << vbase + f[1] << " " << vbase + f[2] << "\n";
        os << "f " << vbase + f[0] << " " << vbase + f[2] << " " << vbase + f[3] << "\n";
    }
    vbase += 8;
}

}  // namespace

std::string to_mesh_obj(const PipeDiagram& p, const std::string& mtl_filename) {
    std::ostringstream os;
    os << "mtllib " << mtl_filename << "\n";
    int vbase = 1;
    auto material = [&](const Cube& c) -> std::string {
        switch (c.kind) {
            case CubeKind::Standard: return c.color == PatchColor::Blue ? "blue" : "red";
            case CubeKind::Hadamard: return "hadamard";
            case CubeKind::YCap: return "ycap";
            case CubeKind::InjectionPort: return "injection";
            case CubeKind::BoundaryPort: return "boundary";
        }
        return "boundary";
    };
    for (const Cube& c : p.cubes) {
        os << "o cube_" << c.id << "\nusemtl " << material(c) << "\n";
        emit_prism(os, c.pos.x, c.pos.y, c.pos.z, 0.38, 0.38, 0.38, vbase);
    }
    for (size_t i = 0; i < p.pipes.size(); ++i) {
        const Pipe& e = p.pipes[i];
        const Cube* a = p.find_cube(e.a);
        const Cube* b = p.find_cube(e.b);
        os << "o pipe_" << i << "\nusemtl pipe\n";
        double hx = e.dir == Axis::X ? 0.5 : 0.16;
        double hy = e.dir == Axis::Y ? 0.5 : 0.16;
        double hz = e.dir == Axis::Z ? 0.5 : 0.16;
        emit_prism(os, (a->pos.x + b->pos.x) / 2.0, (a->pos.y + b->pos.y) / 2.0,
                   (a->pos.z + b->pos.z) / 2.0, hx, hy, hz, vbase);
    }
    return os.str();
}

std::string mesh_mtl() {
    return
        "newmtl blue\nKd 0.22 0.42 0.85\n"
        "newmtl red\nKd 0.85 0.30 0.25\n"
        "newmtl hadamard\nKd 0.93 0.82 0.25\n"
        "newmtl ycap\nKd 0.30 0.75 0.38\n"
        "newmtl injection\nKd 0.62 0.32 0.80\n"
        "newmtl boundary\nKd 0.55 0.55 0.55\n"
        "newmtl pipe\nKd 0.75 0.73 0.70\n";
}

}  // namespace topols::pipe
