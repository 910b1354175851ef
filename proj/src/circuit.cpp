#include "topols/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

namespace topols::circuit {

std::string gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::T: return "t";
        case GateKind::Rz: return "rz";
        case GateKind::CNOT: return "cx";
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
    }
    return "?";
}

void check_circuit(const Circuit& c) {
    if (c.num_qubits <= 0) throw std::invalid_argument("circuit must have at least one qubit");
    for (const Gate& g : c.gates) {
        size_t want = g.kind == GateKind::CNOT ? 2 : 1;
        if (g.qubits.size() != want)
            throw std::invalid_argument("gate " + gate_name(g.kind) + " expects " +
                                        std::to_string(want) + " qubit(s)");
        for (int q : g.qubits)
            if (q < 0 || q >= c.num_qubits)
                throw std::invalid_argument("qubit index out of range: " + std::to_string(q));
        if (want == 2 && g.qubits[0] == g.qubits[1])
            throw std::invalid_argument("duplicate qubit in two-qubit gate");
        if (g.kind == GateKind::Rz && !std::isfinite(g.angle))
            throw std::invalid_argument("rz angle must be finite");
    }
}

int depth(const Circuit& c) {
    std::vector<int> level(c.num_qubits, 0);
    int d = 0;
    for (const Gate& g : c.gates) {
        int at = 0;
        for (int q : g.qubits) at = std::max(at, level[q]);
        ++at;
        for (int q : g.qubits) level[q] = at;
        d = std::max(d, at);
    }
    return d;
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_space_and_comments() {
        while (!done()) {
            char ch = peek();
            if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else if (ch == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
                while (!done() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    std::string ident() {
        skip_space_and_comments();
        if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail("expected identifier");
        std::string s;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            s += peek();
            advance();
        }
        return s;
    }

    void expect(char ch) {
        skip_space_and_comments();
        if (done() || peek() != ch) fail(std::string("expected '") + ch + "'");
        advance();
    }

    bool accept(char ch) {
        skip_space_and_comments();
        if (!done() && peek() == ch) {
            advance();
            return true;
        }
        return false;
    }

    int integer() {
        skip_space_and_comments();
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1 << 24) fail("integer too large");
            advance();
        }
        return static_cast<int>(v);
    }

    // Raw text until the matching ')' at depth 0; for rz angle expressions.
    std::string until_close_paren() {
        std::string s;
        int depth = 0;
        while (!done()) {
            char ch = peek();
            if (ch == '(') ++depth;
            if (ch == ')') {
                if (depth == 0) return s;
                --depth;
            }
            s += ch;
            advance();
        }
        fail("unterminated '('");
    }
};

// Angle grammar: term (('+'|'-') term)* where term is float ('*' float)?
// ('/' float)? and "pi" is a literal. Covers the usual pi/4, 3*pi/2 forms.
double eval_angle(const std::string& expr, Cursor& at) {
    size_t i = 0;
    auto skip = [&] { while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i; };
    auto factor = [&]() -> double {
        skip();
        if (i < expr.size() && expr.compare(i, 2, "pi") == 0) {
            i += 2;
            return M_PI;
        }
        size_t start = i;
        if (i < expr.size() && (expr[i] == '+' || expr[i] == '-')) ++i;
        while (i < expr.size() &&
               (std::isdigit(static_cast<unsigned char>(expr[i])) || expr[i] == '.' ||
                expr[i] == 'e' || expr[i] == 'E' ||
                ((expr[i] == '+' || expr[i] == '-') && i > start && (expr[i - 1] == 'e' || expr[i - 1] == 'E'))))
            ++i;
        if (i == start) at.fail("bad angle expression: " + expr);
        return std::strtod(expr.substr(start, i - start).c_str(), nullptr);
    };
    auto term = [&]() -> double {
        double v = 1.0;
        bool neg = false;
        skip();
        while (i < expr.size() && (expr[i] == '-' || expr[i] == '+')) {
            if (expr[i] == '-') neg = !neg;
            ++i;
            skip();
        }
        v = factor();
        for (;;) {
            skip();
            if (i < expr.size() && expr[i] == '*') {
                ++i;
                v *= factor();
            } else if (i < expr.size() && expr[i] == '/') {
                ++i;
                double d = factor();
                if (d == 0.0) at.fail("division by zero in angle");
                v /= d;
            } else {
                break;
            }
        }
        return neg ? -v : v;
    };
    double v = term();
    for (;;) {
        skip();
        if (i >= expr.size()) break;
        if (expr[i] == '+') {
            ++i;
            v += term();
        } else if (expr[i] == '-') {
            ++i;
            v -= term();
        } else {
            at.fail("bad angle expression: " + expr);
        }
    }
    return v;
}

}  // namespace

Circuit parse_qasm(const std::string& text) {
    Cursor cur{text};
    Circuit c;
    std::string reg_name;
    bool have_reg = false;

    for (;;) {
        cur.skip_space_and_comments();
        if (cur.done()) break;
        int stmt_line = cur.line, stmt_col = cur.col;
        std::string word = cur.ident();

        if (word == "OPENQASM") {
            while (!cur.done() && cur.peek() != ';') cur.advance();
            cur.expect(';');
            continue;
        }
        if (word == "include") {
            while (!cur.done() && cur.peek() != ';') cur.advance();
            cur.expect(';');
            continue;
        }
        if (word == "qreg") {
            if (have_reg) throw ParseError("multiple qreg declarations are not supported", stmt_line, stmt_col);
            reg_name = cur.ident();
            cur.expect('[');
            int n = cur.integer();
            cur.expect(']');
            cur.expect(';');
            if (n <= 0) throw ParseError("qreg size must be positive", stmt_line, stmt_col);
            c.num_qubits = n;
            have_reg = true;
            continue;
        }
        if (word == "measure" || word == "reset" || word == "creg" || word == "if" ||
            word == "barrier") {
            throw ParseError("'" + word + "' is not supported: circuits are compiled as linear maps",
                             stmt_line, stmt_col);
        }

        static const std::map<std::string, GateKind> one_q = {
            {"h", GateKind::H}, {"s", GateKind::S},   {"sdg", GateKind::S},
            {"t", GateKind::T}, {"tdg", GateKind::T}, {"x", GateKind::X},
            {"z", GateKind::Z}};

        auto read_operand = [&]() -> int {
            std::string r = cur.ident();
            if (!have_reg) throw ParseError("gate before qreg declaration", stmt_line, stmt_col);
            if (r != reg_name) throw ParseError("unknown register '" + r + "'", stmt_line, stmt_col);
            cur.expect('[');
            int q = cur.integer();
            cur.expect(']');
            if (q >= c.num_qubits)
                throw ParseError("qubit index out of range: " + std::to_string(q), stmt_line, stmt_col);
            return q;
        };

        if (word == "rz") {
            cur.expect('(');
            std::string expr = cur.until_close_paren();
            cur.expect(')');
            double angle = eval_angle(expr, cur);
            if (!std::isfinite(angle)) throw ParseError("rz angle must be finite", stmt_line, stmt_col);
            int q = read_operand();
            cur.expect(';');
            c.gates.push_back({GateKind::Rz, {q}, angle});
            continue;
        }
        if (word == "cx") {
            int a = read_operand();
            cur.expect(',');
            int b = read_operand();
            cur.expect(';');
            if (a == b) throw ParseError("duplicate qubit in two-qubit gate", stmt_line, stmt_col);
            c.gates.push_back({GateKind::CNOT, {a, b}});
            continue;
        }
        auto it = one_q.find(word);
        if (it == one_q.end())
            throw ParseError("unsupported gate '" + word + "'", stmt_line, stmt_col);
        int q = read_operand();
        cur.expect(';');
        // sdg/tdg normalize to phase spiders with negative phase
        if (word == "sdg")
            c.gates.push_back({GateKind::Rz, {q}, -M_PI / 2});
        else if (word == "tdg")
            c.gates.push_back({GateKind::Rz, {q}, -M_PI / 4});
        else
            c.gates.push_back({it->second, {q}});
    }

    if (!have_reg) throw ParseError("missing qreg declaration", cur.line, cur.col);
    check_circuit(c);
    return c;
}

std::string serialize_qasm(const Circuit& c) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "qreg q[" << c.num_qubits << "];\n";
    os.precision(17);
    for (const Gate& g : c.gates) {
        if (g.kind == GateKind::Rz) {
            os << "rz(" << g.angle << ") q[" << g.qubits[0] << "];\n";
        } else if (g.kind == GateKind::CNOT) {
            os << "cx q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
        } else {
            os << gate_name(g.kind) << " q[" << g.qubits[0] << "];\n";
        }
    }
    return os.str();
}

namespace {

// splitmix64: tiny deterministic generator, stable across platforms.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

}  // namespace

Circuit generate_benchmark(const std::string& family, int n, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("benchmark size must be at least 2");
    Circuit c;
    c.num_qubits = n;

    if (family == "ghz") {
        c.gates.push_back({GateKind::H, {0}});
        for (int i = 0; i + 1 < n; ++i) c.gates.push_back({GateKind::CNOT, {i, i + 1}});
    } else if (family == "ladder") {
        for (int i = 0; i + 1 < n; ++i) c.gates.push_back({GateKind::CNOT, {i, i + 1}});
    } else if (family == "bv") {
        // data qubits 0..n-2, ancilla n-1 prepared in |->; all-ones string
        int anc = n - 1;
        c.gates.push_back({GateKind::X, {anc}});
        c.gates.push_back({GateKind::H, {anc}});
        for (int i = 0; i < anc; ++i) c.gates.push_back({GateKind::H, {i}});
        for (int i = 0; i < anc; ++i) c.gates.push_back({GateKind::CNOT, {i, anc}});
        for (int i = 0; i < anc; ++i) c.gates.push_back({GateKind::H, {i}});
    } else if (family == "dj") {
        // constant-zero oracle: no oracle gates between the H layers
        int anc = n - 1;
        c.gates.push_back({GateKind::X, {anc}});
        c.gates.push_back({GateKind::H, {anc}});
        for (int i = 0; i < anc; ++i) c.gates.push_back({GateKind::H, {i}});
        for (int i = 0; i < anc; ++i) c.gates.push_back({GateKind::H, {i}});
    } else if (family == "random_clifford") {
        Rng rng(seed * 0x51ed2701  + 0xabcd1234ULL);
        int gates = 3 * n;
        for (int g = 0; g < gates; ++g) {
            switch (rng.below(3)) {
                case 0: c.gates.push_back({GateKind::H, {rng.below(n)}}); break;
                case 1: c.gates.push_back({GateKind::S, {rng.below(n)}}); break;
                default: {
                    int a = rng.below(n);
                    int b = rng.below(n - 1);
                    if (b >= a) ++b;
                    c.gates.push_back({GateKind::CNOT, {a, b}});
                }
            }
        }
    } else {
        throw std::invalid_argument("unknown benchmark family '" + family + "'");
    }
    check_circuit(c);
    return c;
}

bool gates_equal(const Circuit& a, const Circuit& b) {
    if (a.num_qubits != b.num_qubits || a.gates.size() != b.gates.size()) return false;
    for (size_t i = 0; i < a.gates.size(); ++i) {
        const Gate &x = a.gates[i], &y = b.gates[i];
        if (x.kind != y.kind || x.qubits != y.qubits) return false;
        if (x.kind == GateKind::Rz && x.angle != y.angle) return false;
    }
    return true;
}

}  // namespace topols::circuit
