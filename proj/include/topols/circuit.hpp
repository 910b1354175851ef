#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace topols::circuit {

enum class GateKind { H, S, T, Rz, CNOT, X, Z };

std::string gate_name(GateKind k);

struct Gate {
    GateKind kind;
    std::vector<int> qubits;      // 1 entry, or 2 for CNOT (control, target)
    double angle = 0.0;           // Rz only

    bool single_qubit() const { return kind != GateKind::CNOT; }
    // X and Z compile to Pauli-frame updates; they produce no pipe structure.
    bool software_only() const { return kind == GateKind::X || kind == GateKind::Z; }
};

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
};

// Thrown on malformed programs; carries 1-based line/column positions.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ")"),
          line(line_),
          column(col_) {}
};

// Checks qubit-index bounds and distinctness; throws std::invalid_argument.
void check_circuit(const Circuit& c);

// Longest chain of gates sharing a qubit (as-soon-as-possible layering).
// Software-only gates occupy a slot like any other gate.
int depth(const Circuit& c);

// Parses the supported OPENQASM-2 subset. `OPENQASM`/`include` headers are
// ignored, one qreg is required, statements are h/s/sdg/t/tdg/x/z/rz/cx.
// Measurement, reset and classical control are rejected.
Circuit parse_qasm(const std::string& text);

// Emits a program parse_qasm() accepts; parse(serialize(c)) == c.
std::string serialize_qasm(const Circuit& c);

// Benchmark families: ghz, ladder, bv, dj, random_clifford.
// bv uses the all-ones hidden string; dj uses the constant-zero oracle,
// so generated gate counts are deterministic.
Circuit generate_benchmark(const std::string& family, int n, uint64_t seed = 0);

bool gates_equal(const Circuit& a, const Circuit& b);

}  // namespace topols::circuit
