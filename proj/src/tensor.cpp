#include "topols/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace topols::zx {

double LinearMap::max_abs() const {
    double m = 0;
    for (const cplx& v : entries) m = std::max(m, std::abs(v));
    return m;
}

LinearMap multiply(const LinearMap& a, const LinearMap& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix dimension mismatch");
    LinearMap out = LinearMap::zero(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int k = 0; k < a.cols; ++k) {
            cplx v = a.at(r, k);
            if (v == cplx{0, 0}) continue;
            for (int c = 0; c < b.cols; ++c) out.at(r, c) += v * b.at(k, c);
        }
    return out;
}

LinearMap tensor_product(const LinearMap& a, const LinearMap& b) {
    LinearMap out = LinearMap::zero(a.rows * b.rows, a.cols * b.cols);
    for (int ra = 0; ra < a.rows; ++ra)
        for (int ca = 0; ca < a.cols; ++ca)
            for (int rb = 0; rb < b.rows; ++rb)
                for (int cb = 0; cb < b.cols; ++cb)
                    out.at(ra * b.rows + rb, ca * b.cols + cb) = a.at(ra, ca) * b.at(rb, cb);
    return out;
}

namespace {

constexpr int kMaxRank = 26;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Dense tensor over {0,1}^rank with integer axis labels. Axis 0 owns the
// most significant index bit.
struct Tensor {
    std::vector<int> axes;
    std::vector<cplx> data;

    int rank() const { return static_cast<int>(axes.size()); }
};

Tensor scalar_tensor(cplx v) { return Tensor{{}, {v}}; }

Tensor z_spider_tensor(double phase, const std::vector<int>& axes) {
    Tensor t;
    t.axes = axes;
    if (axes.empty()) {
        t.data = {cplx{1, 0} + std::polar(1.0, phase)};
        return t;
    }
    t.data.assign(size_t{1} << axes.size(), cplx{0, 0});
    t.data.front() = {1, 0};
    t.data.back() = std::polar(1.0, phase);
    return t;
}

// Applies a 2x2 matrix m to one axis: t'[..j..] = sum_k m[j][k] t[..k..].
void apply_on_axis(Tensor& t, int axis_pos, const cplx m[2][2]) {
    size_t bit = size_t{1} << (t.rank() - 1 - axis_pos);
    for (size_t idx = 0; idx < t.data.size(); ++idx) {
        if (idx & bit) continue;
        cplx v0 = t.data[idx];
        cplx v1 = t.data[idx | bit];
        t.data[idx] = m[0][0] * v0 + m[0][1] * v1;
        t.data[idx | bit] = m[1][0] * v0 + m[1][1] * v1;
    }
}

const cplx kHadamard[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};

Tensor x_spider_tensor(double phase, const std::vector<int>& axes) {
    Tensor t = z_spider_tensor(phase, axes);
    for (int i = 0; i < t.rank(); ++i) apply_on_axis(t, i, kHadamard);
    return t;
}

Tensor hbox_tensor(const std::vector<int>& axes) {
    Tensor t;
    t.axes = axes;
    t.data = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    return t;
}

Tensor delta_tensor(int axis_a, int axis_b) {
    Tensor t;
    t.axes = {axis_a, axis_b};
    t.data = {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};
    return t;
}

// Contracts all shared axes of a and b.
Tensor contract(const Tensor& a, const Tensor& b) {
    std::vector<int> shared;
    for (int ax : a.axes)
        if (std::find(b.axes.begin(), b.axes.end(), ax) != b.axes.end()) shared.push_back(ax);

    Tensor out;
    for (int ax : a.axes)
        if (std::find(shared.begin(), shared.end(), ax) == shared.end()) out.axes.push_back(ax);
    for (int ax : b.axes)
        if (std::find(shared.begin(), shared.end(), ax) == shared.end()) out.axes.push_back(ax);
    if (out.rank() > kMaxRank) throw std::runtime_error("tensor contraction exceeds size guard");

    int s = static_cast<int>(shared.size());
    out.data.assign(size_t{1} << out.rank(), cplx{0, 0});

    // bit weight of every a/b axis as a function of (result index, shared index)
    auto weights = [&](const Tensor& t) {
        std::vector<std::pair<size_t, size_t>> w;  // (weight in result, weight in shared)
        for (int i = 0; i < t.rank(); ++i) {
            int ax = t.axes[i];
            size_t wr = 0, ws = 0;
            auto rit = std::find(out.axes.begin(), out.axes.end(), ax);
            if (rit != out.axes.end())
                wr = size_t{1} << (out.rank() - 1 - (rit - out.axes.begin()));
            else {
                auto sit = std::find(shared.begin(), shared.end(), ax);
                ws = size_t{1} << (s - 1 - (sit - shared.begin()));
            }
            w.emplace_back(wr, ws);
        }
        return w;
    };
    auto wa = weights(a), wb = weights(b);

    auto index_of = [](const Tensor& t, const std::vector<std::pair<size_t, size_t>>& w,
                       size_t ridx, size_t sidx) {
        size_t idx = 0;
        for (int i = 0; i < t.rank(); ++i) {
            bool bit = w[i].first ? (ridx & w[i].first) : (sidx & w[i].second);
            if (bit) idx |= size_t{1} << (t.rank() - 1 - i);
        }
        return idx;
    };

    for (size_t ridx = 0; ridx < out.data.size(); ++ridx) {
        cplx acc{0, 0};
        for (size_t sidx = 0; sidx < (size_t{1} << s); ++sidx)
            acc += a.data[index_of(a, wa, ridx, sidx)] * b.data[index_of(b, wb, ridx, sidx)];
        out.data[ridx] = acc;
    }
    return out;
}

}  // namespace

LinearMap evaluate_tensor(const ZxDiagram& g) {
    g.check();
    int n = static_cast<int>(g.inputs.size());
    int m = static_cast<int>(g.outputs.size());
    if (n + m > 20) throw std::runtime_error("tensor evaluation size guard exceeded (n + m > 20)");

    // Axis labels: edge index e -> e; boundary port k -> kPortBase + k.
    const int kPortBase = 1 << 24;
    std::map<int, int> port_axis;  // boundary node id -> port axis label
    for (int k = 0; k < n; ++k) port_axis[g.inputs[k]] = kPortBase + k;
    for (int k = 0; k < m; ++k) port_axis[g.outputs[k]] = kPortBase + n + k;

    std::vector<Tensor> pool;
    for (const auto& [id, node] : g.nodes) {
        std::vector<int> axes = g.incident_edges(id);
        switch (node.kind) {
            case NodeKind::ZSpider: pool.push_back(z_spider_tensor(node.phase, axes)); break;
            case NodeKind::XSpider: pool.push_back(x_spider_tensor(node.phase, axes)); break;
            case NodeKind::HBox:
                if (axes.size() != 2) throw std::logic_error("Hadamard box degree != 2");
                pool.push_back(hbox_tensor(axes));
                break;
            case NodeKind::Boundary:
                pool.push_back(delta_tensor(axes.at(0), port_axis.at(id)));
                break;
        }
    }
    if (pool.empty()) pool.push_back(scalar_tensor({1, 0}));

    // Greedy contraction: pick the sharing pair with the smallest result rank.
    while (pool.size() > 1) {
        int best_i = -1, best_j = -1, best_rank = 1 << 30;
        for (size_t i = 0; i < pool.size(); ++i)
            for (size_t j = i + 1; j < pool.size(); ++j) {
                int shared = 0;
                for (int ax : pool[i].axes)
                    shared += std::find(pool[j].axes.begin(), pool[j].axes.end(), ax) !=
                              pool[j].axes.end();
                if (shared == 0) continue;
                int rank = pool[i].rank() + pool[j].rank() - 2 * shared;
                if (rank < best_rank) {
                    best_rank = rank;
                    best_i = static_cast<int>(i);
                    best_j = static_cast<int>(j);
                }
            }
        if (best_i < 0) {
            // disconnected components: outer product of the first two
            best_i = 0;
            best_j = 1;
        }
        Tensor merged = contract(pool[best_i], pool[best_j]);
        pool.erase(pool.begin() + best_j);
        pool[best_i] = std::move(merged);
    }

    Tensor& t = pool.front();
    LinearMap out = LinearMap::zero(1 << m, 1 << n);

    // map result axes to row/col bit weights
    std::vector<std::pair<size_t, size_t>> weight(t.rank());  // (row weight, col weight)
    for (int i = 0; i < t.rank(); ++i) {
        int ax = t.axes[i];
        if (ax < kPortBase + n)
            weight[i] = {0, size_t{1} << (n - 1 - (ax - kPortBase))};
        else
            weight[i] = {size_t{1} << (m - 1 - (ax - kPortBase - n)), 0};
    }
    for (size_t idx = 0; idx < t.data.size(); ++idx) {
        size_t r = 0, c = 0;
        for (int i = 0; i < t.rank(); ++i)
            if (idx & (size_t{1} << (t.rank() - 1 - i))) {
                r |= weight[i].first;
                c |= weight[i].second;
            }
        out.at(static_cast<int>(r), static_cast<int>(c)) = t.data[idx];
    }
    return out;
}

bool equivalent_up_to_scalar(const LinearMap& a, const LinearMap& b, double tol) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("linear map dimension mismatch");
    double ma = a.max_abs(), mb = b.max_abs();
    double scale = std::max(ma, mb);
    if (scale == 0.0) return true;  // both zero maps
    if (ma == 0.0 || mb == 0.0) return false;

    // lambda from the largest-magnitude entry pair
    size_t best = 0;
    double best_mag = -1;
    for (size_t i = 0; i < a.entries.size(); ++i) {
        double mag = std::abs(a.entries[i]) + std::abs(b.entries[i]);
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    if (std::abs(b.entries[best]) == 0.0) return false;
    cplx lambda = a.entries[best] / b.entries[best];
    if (std::abs(lambda) == 0.0) return false;

    double worst = 0;
    for (size_t i = 0; i < a.entries.size(); ++i)
        worst = std::max(worst, std::abs(a.entries[i] - lambda * b.entries[i]));
    return worst <= tol * scale;
}

}  // namespace topols::zx
