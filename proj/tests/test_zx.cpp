#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "topols/zx.hpp"

using namespace topols;
using namespace topols::zx;

namespace {

int count_kind(const ZxDiagram& g, NodeKind k) {
    int n = 0;
    for (const auto& [id, node] : g.nodes) n += node.kind == k;
    return n;
}

}  // namespace

TEST_CASE("cnot translation shape") {
    circuit::Circuit c = circuit::parse_qasm("qreg q[2]; cx q[0],q[1];");
    ZxDiagram g = circuit_to_zx(c);
    CHECK(count_kind(g, NodeKind::ZSpider) == 1);
    CHECK(count_kind(g, NodeKind::XSpider) == 1);
    CHECK(count_kind(g, NodeKind::Boundary) == 4);
    CHECK(g.edges.size() == 5);
}

TEST_CASE("s gate is a single pi/2 z spider between boundaries") {
    circuit::Circuit c = circuit::parse_qasm("qreg q[1]; s q[0];");
    ZxDiagram g = circuit_to_zx(c);
    CHECK(count_kind(g, NodeKind::ZSpider) == 1);
    for (const auto& [id, node] : g.nodes)
        if (node.kind == NodeKind::ZSpider) {
            CHECK(node.phase == doctest::Approx(M_PI / 2));
            CHECK(g.degree(id) == 2);
        }
}

TEST_CASE("empty circuit gives direct wires") {
    circuit::Circuit c;
    c.num_qubits = 3;
    ZxDiagram g = circuit_to_zx(c);
    CHECK(g.nodes.size() == 6);
    CHECK(g.edges.size() == 3);
    for (const auto& [a, b] : g.edges) {
        CHECK(g.is_boundary(a));
        CHECK(g.is_boundary(b));
    }
}

TEST_CASE("adjacent same-type spiders fuse with summed phase") {
    circuit::Circuit c = circuit::parse_qasm("qreg q[1]; t q[0]; t q[0];");
    ZxDiagram g = fuse_all(circuit_to_zx(c));
    CHECK(g.spider_count() == 1);
    for (const auto& [id, node] : g.nodes)
        if (is_spider(node.kind)) CHECK(node.phase == doctest::Approx(M_PI / 2));
}

TEST_CASE("fusion skips when the merged spider would exceed four wires") {
    // five CNOTs sharing control q0: controls fuse 3+3 -> 4 but not further
    circuit::Circuit c;
    c.num_qubits = 6;
    for (int t = 1; t <= 5; ++t)
        c.gates.push_back({circuit::GateKind::CNOT, {0, t}});
    ZxDiagram g = fuse_all(circuit_to_zx(c));
    int max_deg = 0, z_count = 0;
    for (const auto& [id, node] : g.nodes)
        if (node.kind == NodeKind::ZSpider) {
            ++z_count;
            max_deg = std::max(max_deg, g.degree(id));
        }
    CHECK(max_deg == 4);
    CHECK(z_count >= 2);
}

TEST_CASE("fusion counts on a hand-traced circuit") {
    // q0 chain S,Z(ctl),S,Z(ctl) fuses three times; the two targets on q1 fuse once
    circuit::Circuit c = circuit::parse_qasm(
        "qreg q[2]; s q[0]; cx q[0],q[1]; s q[0]; cx q[0],q[1];");
    FusionStats st;
    ZxDiagram g = fuse_all(circuit_to_zx(c), 4, st);
    CHECK(st.z_fusions == 3);
    CHECK(st.x_fusions == 1);
    CHECK(g.spider_count() == 2);
    // the fused pair is joined by two parallel edges which must survive
    int zid = -1, xid = -1;
    for (const auto& [id, node] : g.nodes) {
        if (node.kind == NodeKind::ZSpider) zid = id;
        if (node.kind == NodeKind::XSpider) xid = id;
    }
    int mult = 0;
    for (const auto& [a, b] : g.edges)
        mult += (a == std::min(zid, xid) && b == std::max(zid, xid));
    CHECK(mult == 2);
}

TEST_CASE("identity spiders are removed") {
    circuit::Circuit c = circuit::parse_qasm("qreg q[1]; z q[0]; z q[0];");
    // two pi spiders fuse into phase 0, then drop as an identity
    ZxDiagram g = fuse_all(circuit_to_zx(c));
    CHECK(g.spider_count() == 0);
    CHECK(g.edges.size() == 1);
}

TEST_CASE("fuse_all is idempotent and preserves boundaries") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        circuit::Circuit c = oracle::random_circuit(3 + rng.below(2), 6 + rng.below(5), rng);
        ZxDiagram g = circuit_to_zx(c);
        ZxDiagram f1 = fuse_all(g);
        ZxDiagram f2 = fuse_all(f1);
        CHECK(same_structure(f1, f2));
        CHECK(f1.inputs == g.inputs);
        CHECK(f1.outputs == g.outputs);
        CHECK(f1.spider_count() <= g.spider_count());
    }
}

TEST_CASE("phase normalization wraps into [0, 2pi)") {
    CHECK(normalize_phase(-M_PI / 2) == doctest::Approx(3 * M_PI / 2));
    CHECK(normalize_phase(2 * M_PI) == 0.0);
    CHECK(normalize_phase(5 * M_PI) == doctest::Approx(M_PI));
    CHECK(normalize_phase(2 * M_PI - 1e-15) == 0.0);
}

TEST_CASE("zx json dump mentions every node") {
    ZxDiagram g = circuit_to_zx(circuit::parse_qasm("qreg q[2]; cx q[0],q[1];"));
    std::string j = to_json(g);
    CHECK(j.find("\"z\"") != std::string::npos);
    CHECK(j.find("\"x\"") != std::string::npos);
    CHECK(j.find("\"boundary\"") != std::string::npos);
}
