#include "topols/pipe_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace topols::pipe {

namespace {

using nlohmann::json;

json axis_json(Axis a) { return axis_name(a); }

Axis axis_from(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "x") return Axis::X;
    if (s == "y") return Axis::Y;
    if (s == "z") return Axis::Z;
    throw std::invalid_argument("bad axis '" + s + "'");
}

PatchColor color_from(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "blue") return PatchColor::Blue;
    if (s == "red") return PatchColor::Red;
    throw std::invalid_argument("bad color '" + s + "'");
}

CubeKind kind_from(const std::string& s) {
    if (s == "standard") return CubeKind::Standard;
    if (s == "hadamard") return CubeKind::Hadamard;
    if (s == "ycap") return CubeKind::YCap;
    if (s == "injection") return CubeKind::InjectionPort;
    if (s == "port") return CubeKind::BoundaryPort;
    throw std::invalid_argument("bad cube kind '" + s + "'");
}

}  // namespace

std::string save_json(const PipeDiagram& p) {
    json j;
    j["version"] = 1;
    j["cubes"] = json::array();
    for (const Cube& c : p.cubes) {
        json jc;
        jc["id"] = c.id;
        jc["pos"] = {c.pos.x, c.pos.y, c.pos.z};
        jc["kind"] = kind_name(c.kind);
        if (c.kind == CubeKind::Standard) {
            jc["orientation"] = axis_json(c.orientation);
            jc["color"] = color_name(c.color);
        }
        if (c.kind == CubeKind::InjectionPort) jc["angle"] = c.angle;
        j["cubes"].push_back(jc);
    }
    j["pipes"] = json::array();
    for (const Pipe& e : p.pipes) {
        json je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["dir"] = axis_json(e.dir);
        je["blue"] = axis_json(e.blue);
        je["red"] = axis_json(e.red());
        j["pipes"].push_back(je);
    }
    j["inputs"] = p.input_ports;
    j["outputs"] = p.output_ports;
    j["meta"] = {{"volume", space_time_volume(p)}, {"time_steps", time_steps(p)}};
    return j.dump(2) + "\n";
}

PipeDiagram load_json(const std::string& text) {
    json j = json::parse(text);
    PipeDiagram p;
    for (const json& jc : j.at("cubes")) {
        Cube c;
        c.id = jc.at("id").get<int>();
        auto pos = jc.at("pos");
        c.pos = Vec3{pos.at(0).get<int>(), pos.at(1).get<int>(), pos.at(2).get<int>()};
        c.kind = kind_from(jc.at("kind").get<std::string>());
        if (c.kind == CubeKind::Standard) {
            c.orientation = axis_from(jc.at("orientation"));
            c.color = color_from(jc.at("color"));
        }
        if (c.kind == CubeKind::InjectionPort) c.angle = jc.at("angle").get<double>();
        p.cubes.push_back(c);
        p.next_cube_id = std::max(p.next_cube_id, c.id + 1);
    }
    std::sort(p.cubes.begin(), p.cubes.end(), [](const Cube& a, const Cube& b) { return a.id < b.id; });
    for (const json& je : j.at("pipes")) {
        Pipe e;
        e.a = je.at("a").get<int>();
        e.b = je.at("b").get<int>();
        e.dir = axis_from(je.at("dir"));
        e.blue = axis_from(je.at("blue"));
        if (e.blue == e.dir || axis_from(je.at("red")) != e.red())
            throw std::invalid_argument("pipe orientations must be mutually orthogonal");
        p.pipes.push_back(e);
    }
    p.input_ports = j.at("inputs").get<std::vector<int>>();
    p.output_ports = j.at("outputs").get<std::vector<int>>();
    return p;
}

bool same_structure(const PipeDiagram& a, const PipeDiagram& b) {
    if (a.cubes.size() != b.cubes.size() || a.pipes.size() != b.pipes.size()) return false;
    if (a.input_ports != b.input_ports || a.output_ports != b.output_ports) return false;
    for (size_t i = 0; i < a.cubes.size(); ++i) {
        const Cube &x = a.cubes[i], &y = b.cubes[i];
        if (x.id != y.id || x.pos != y.pos || x.kind != y.kind) return false;
        if (x.kind == CubeKind::Standard && (x.orientation != y.orientation || x.color != y.color))
            return false;
        if (x.kind == CubeKind::InjectionPort && x.angle != y.angle) return false;
    }
    for (size_t i = 0; i < a.pipes.size(); ++i) {
        const Pipe &x = a.pipes[i], &y = b.pipes[i];
        if (x.a != y.a || x.b != y.b || x.dir != y.dir || x.blue != y.blue) return false;
    }
    return true;
}

}  // namespace topols::pipe
