#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "topols/pipe.hpp"
#include "topols/pipe_io.hpp"
#include "topols/tensor.hpp"

using namespace topols;
using namespace topols::pipe;

namespace {

// The two-step merge-split CNOT: control at (1,0), target at (0,1), the
// ancilla worldline at (1,1) connecting an x merge at t=0 to a y merge at
// t=1. Bounding box 2x2x2.
PipeDiagram canonical_cnot() {
    PipeDiagram p;
    auto std_cube = [&](int x, int y, int z, Axis o, PatchColor c) {
        Cube q;
        q.pos = {x, y, z};
        q.kind = CubeKind::Standard;
        q.orientation = o;
        q.color = c;
        return p.add_cube(q);
    };
    int a0 = std_cube(1, 0, 0, Axis::X, PatchColor::Blue);   // control idles
    int a1 = std_cube(1, 0, 1, Axis::X, PatchColor::Blue);   // control ZZ junction
    int b0 = std_cube(0, 1, 0, Axis::Y, PatchColor::Red);    // target XX junction
    int b1 = std_cube(0, 1, 1, Axis::X, PatchColor::Blue);   // target idles
    int c0 = std_cube(1, 1, 0, Axis::Y, PatchColor::Red);    // ancilla born in the XX merge
    int c1 = std_cube(1, 1, 1, Axis::X, PatchColor::Blue);   // ancilla dies in the ZZ merge

    p.add_pipe(a0, a1, Axis::X);  // vertical worldlines, blue facing x
    p.add_pipe(b0, b1, Axis::X);
    p.add_pipe(c0, c1, Axis::X);
    p.add_pipe(b0, c0, Axis::Z);  // x merge at t=0: blue on z
    p.add_pipe(c1, a1, Axis::X);  // y merge at t=1: blue on x

    p.input_ports = {a0, b0};
    p.output_ports = {a1, b1};
    return p;
}

}  // namespace

TEST_CASE("canonical cnot diagram is valid with volume 8") {
    PipeDiagram p = canonical_cnot();
    auto violations = validate_pipe_diagram(p);
    for (const auto& v : violations) {
        CAPTURE(v.rule);
        CAPTURE(v.message);
    }
    CHECK(violations.empty());
    CHECK(space_time_volume(p) == 8);
    CHECK(time_steps(p) == 2);
}

TEST_CASE("canonical cnot interprets to the cnot map") {
    PipeDiagram p = canonical_cnot();
    zx::ZxDiagram g = interpret_pipe_as_zx(p);
    zx::LinearMap got = zx::evaluate_tensor(g);
    circuit::Circuit c = circuit::parse_qasm("qreg q[2]; cx q[0],q[1];");
    CHECK(zx::equivalent_up_to_scalar(got, oracle::circuit_unitary(c), 1e-9));
}

TEST_CASE("a pipe along the cube orientation is a direction violation") {
    PipeDiagram p;
    Cube a;
    a.pos = {0, 0, 0};
    a.orientation = Axis::Z;
    a.color = PatchColor::Blue;
    int ia = p.add_cube(a);
    Cube b = a;
    b.pos = {0, 0, 1};
    int ib = p.add_cube(b);
    p.add_pipe(ia, ib, Axis::X);  // runs along z, both cubes oriented z
    auto violations = validate_pipe_diagram(p);
    REQUIRE(!violations.empty());
    bool found = false;
    for (const auto& v : violations) found |= v.rule == "direction";
    CHECK(found);
}

TEST_CASE("color mismatch is reported with ids") {
    PipeDiagram p;
    Cube a;
    a.pos = {0, 0, 0};
    a.orientation = Axis::X;
    a.color = PatchColor::Red;  // vertical standard pipe below carries blue on x
    int ia = p.add_cube(a);
    Cube b;
    b.pos = {0, 0, 1};
    b.orientation = Axis::X;
    b.color = PatchColor::Blue;
    int ib = p.add_cube(b);
    p.add_pipe(ia, ib, Axis::X);
    auto violations = validate_pipe_diagram(p);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "color");
    CHECK(violations[0].cubes == std::vector<int>{ia});
}

TEST_CASE("hadamard cube constraints") {
    PipeDiagram p;
    Cube below;
    below.pos = {0, 0, 0};
    below.orientation = Axis::X;
    below.color = PatchColor::Blue;
    int ib = p.add_cube(below);
    Cube h;
    h.pos = {0, 0, 1};
    h.kind = CubeKind::Hadamard;
    int ih = p.add_cube(h);
    Cube above;
    above.pos = {0, 0, 2};
    above.orientation = Axis::X;
    above.color = PatchColor::Red;  // swapped frame above the box
    int ia = p.add_cube(above);
    p.add_pipe(ib, ih, Axis::X);
    p.add_pipe(ih, ia, Axis::Y);
    CHECK(validate_pipe_diagram(p).empty());

    SUBCASE("third pipe violates the hadamard rule") {
        Cube side;
        side.pos = {1, 0, 1};
        side.orientation = Axis::Z;
        side.color = PatchColor::Blue;
        int is = p.add_cube(side);
        p.add_pipe(ih, is, Axis::Z);
        auto violations = validate_pipe_diagram(p);
        bool found = false;
        for (const auto& v : violations) found |= v.rule == "hadamard";
        CHECK(found);
    }
    SUBCASE("equal colors through the box violate the rule") {
        p.pipes[1].blue = Axis::X;  // same frame on both sides
        auto violations = validate_pipe_diagram(p);
        bool found = false;
        for (const auto& v : violations) found |= v.rule == "hadamard";
        CHECK(found);
    }
}

TEST_CASE("volume arithmetic") {
    PipeDiagram p;
    CHECK(space_time_volume(p) == 0);
    Cube a;
    a.pos = {0, 0, 0};
    p.add_cube(a);
    CHECK(space_time_volume(p) == 1);
    Cube b;
    b.pos = {2, 1, 3};
    p.add_cube(b);
    CHECK(space_time_volume(p) == 24);
}

TEST_CASE("volume is invariant under rigid translation") {
    PipeDiagram p = canonical_cnot();
    long long v = space_time_volume(p);
    for (Cube& c : p.cubes) c.pos = c.pos + Vec3{5, -3, 11};
    CHECK(space_time_volume(p) == v);
}

TEST_CASE("straight pipe stack interprets to a bare wire") {
    PipeDiagram p;
    std::vector<int> ids;
    for (int z = 0; z < 4; ++z) {
        Cube c;
        c.pos = {0, 0, z};
        c.kind = z == 0 || z == 3 ? CubeKind::BoundaryPort : CubeKind::Standard;
        c.orientation = Axis::X;
        c.color = PatchColor::Blue;
        ids.push_back(p.add_cube(c));
    }
    for (int z = 0; z + 1 < 4; ++z) p.add_pipe(ids[z], ids[z + 1], Axis::X);
    p.input_ports = {ids[0]};
    p.output_ports = {ids[3]};
    zx::ZxDiagram g = interpret_pipe_as_zx(p);
    CHECK(g.spider_count() == 0);
    CHECK(g.edges.size() == 1);
    zx::LinearMap m = zx::evaluate_tensor(g);
    CHECK(m.at(0, 0).real() == doctest::Approx(1));
    CHECK(m.at(1, 1).real() == doctest::Approx(1));
}

TEST_CASE("three-port blue junction with a ycap reads as an s gate") {
    PipeDiagram p;
    auto std_cube = [&](int x, int y, int z, Axis o, PatchColor c) {
        Cube q;
        q.pos = {x, y, z};
        q.orientation = o;
        q.color = c;
        return p.add_cube(q);
    };
    int bottom = std_cube(0, 0, 0, Axis::X, PatchColor::Blue);
    int junction = std_cube(0, 0, 1, Axis::X, PatchColor::Blue);
    int top = std_cube(0, 0, 2, Axis::X, PatchColor::Blue);
    Cube cap;
    cap.pos = {0, 1, 1};
    cap.kind = CubeKind::YCap;
    int icap = p.add_cube(cap);
    p.add_pipe(bottom, junction, Axis::X);
    p.add_pipe(junction, top, Axis::X);
    p.add_pipe(junction, icap, Axis::X);
    p.input_ports = {bottom};
    p.output_ports = {top};
    CHECK(validate_pipe_diagram(p).empty());
    zx::LinearMap got = zx::evaluate_tensor(interpret_pipe_as_zx(p));
    circuit::Circuit s_gate = circuit::parse_qasm("qreg q[1]; s q[0];");
    CHECK(zx::equivalent_up_to_scalar(got, oracle::circuit_unitary(s_gate), 1e-9));
}

TEST_CASE("json round trip preserves structure") {
    PipeDiagram p = canonical_cnot();
    Cube inj;
    inj.pos = {5, 5, 5};
    inj.kind = CubeKind::InjectionPort;
    inj.angle = 0.25;
    p.add_cube(inj);
    std::string text = save_json(p);
    PipeDiagram back = load_json(text);
    CHECK(same_structure(p, back));
    CHECK(save_json(back) == text);
}

TEST_CASE("mesh export emits geometry for every cube and pipe") {
    PipeDiagram p = canonical_cnot();
    std::string obj = to_mesh_obj(p, "scene.mtl");
    size_t cubes = 0, pos = 0;
    while ((pos = obj.find("o cube_", pos)) != std::string::npos) {
        ++cubes;
        pos += 7;
    }
    CHECK(cubes == p.cubes.size());
    CHECK(obj.find("usemtl red") != std::string::npos);
    CHECK(mesh_mtl().find("newmtl blue") != std::string::npos);
}
