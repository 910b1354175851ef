#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "topols/tensor.hpp"

using namespace topols;
using namespace topols::zx;

TEST_CASE("degree-2 zero-phase z spider is the identity") {
    ZxDiagram g;
    int in = g.add_node(NodeKind::Boundary);
    int s = g.add_node(NodeKind::ZSpider, 0.0);
    int out = g.add_node(NodeKind::Boundary);
    g.add_edge(in, s);
    g.add_edge(s, out);
    g.inputs = {in};
    g.outputs = {out};
    LinearMap m = evaluate_tensor(g);
    CHECK(m.at(0, 0).real() == doctest::Approx(1));
    CHECK(m.at(1, 1).real() == doctest::Approx(1));
    CHECK(std::abs(m.at(0, 1)) == doctest::Approx(0));
    CHECK(std::abs(m.at(1, 0)) == doctest::Approx(0));
}

TEST_CASE("hadamard box evaluates to the hadamard matrix") {
    ZxDiagram g;
    int in = g.add_node(NodeKind::Boundary);
    int h = g.add_node(NodeKind::HBox);
    int out = g.add_node(NodeKind::Boundary);
    g.add_edge(in, h);
    g.add_edge(h, out);
    g.inputs = {in};
    g.outputs = {out};
    LinearMap m = evaluate_tensor(g);
    const double is2 = 1.0 / std::sqrt(2.0);
    CHECK(m.at(0, 0).real() == doctest::Approx(is2));
    CHECK(m.at(0, 1).real() == doctest::Approx(is2));
    CHECK(m.at(1, 0).real() == doctest::Approx(is2));
    CHECK(m.at(1, 1).real() == doctest::Approx(-is2));
}

TEST_CASE("cnot diagram matches the gate-matrix oracle") {
    circuit::Circuit c = circuit::parse_qasm("qreg q[2]; cx q[0],q[1];");
    LinearMap got = evaluate_tensor(circuit_to_zx(c));
    LinearMap want = oracle::circuit_unitary(c);
    CHECK(equivalent_up_to_scalar(got, want, 1e-9));
    // and it is not a swap
    circuit::Circuit swap_c = circuit::parse_qasm("qreg q[2]; cx q[0],q[1]; cx q[1],q[0]; cx q[0],q[1];");
    CHECK_FALSE(equivalent_up_to_scalar(got, oracle::circuit_unitary(swap_c), 1e-9));
}

TEST_CASE("scalar multiples compare equal") {
    circuit::Circuit c = circuit::parse_qasm("qreg q[2]; h q[0]; cx q[0],q[1];");
    LinearMap m = evaluate_tensor(circuit_to_zx(c));
    LinearMap doubled = m;
    for (auto& v : doubled.entries) v *= cplx{0.0, 2.0};
    CHECK(equivalent_up_to_scalar(m, doubled, 1e-9));
    LinearMap other = LinearMap::zero(m.rows, m.cols);
    other.at(0, 0) = {1, 0};
    CHECK_FALSE(equivalent_up_to_scalar(m, other, 1e-9));
    LinearMap small = LinearMap::zero(2, 2);
    CHECK_THROWS(equivalent_up_to_scalar(m, small, 1e-9));
}

TEST_CASE("circuit translation matches gate products up to scalar") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int qubits = 1 + rng.below(4);
        circuit::Circuit c = oracle::random_circuit(qubits, 1 + rng.below(8), rng);
        LinearMap got = evaluate_tensor(circuit_to_zx(c));
        LinearMap want = oracle::circuit_unitary(c);
        CHECK(equivalent_up_to_scalar(got, want, 1e-9));
    }
}

TEST_CASE("fusion preserves semantics on random circuits") {
    oracle::Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        int qubits = 1 + rng.below(4);
        circuit::Circuit c = oracle::random_circuit(qubits, 1 + rng.below(10), rng);
        ZxDiagram g = circuit_to_zx(c);
        CHECK(equivalent_up_to_scalar(evaluate_tensor(g), evaluate_tensor(fuse_all(g)), 1e-9));
    }
}

TEST_CASE("size guard rejects wide diagrams") {
    circuit::Circuit c;
    c.num_qubits = 11;  // 22 boundary wires
    CHECK_THROWS(evaluate_tensor(circuit_to_zx(c)));
}
