#pragma once

#include <complex>
#include <vector>

#include "topols/zx.hpp"

namespace topols::zx {

using cplx = std::complex<double>;

// Dense linear map on qubit spaces; entries are row-major with qubit 0 as
// the most significant bit on both sides.
struct LinearMap {
    int rows = 1;   // 2^m
    int cols = 1;   // 2^n
    std::vector<cplx> entries;

    cplx at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
    cplx& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }

    double max_abs() const;

    static LinearMap zero(int rows, int cols) {
        LinearMap m;
        m.rows = rows;
        m.cols = cols;
        m.entries.assign(static_cast<size_t>(rows) * cols, cplx{0, 0});
        return m;
    }
};

LinearMap multiply(const LinearMap& a, const LinearMap& b);
LinearMap tensor_product(const LinearMap& a, const LinearMap& b);

// Contracts the spider tensors of g over internal edges and returns the
// exact linear map. Guard: inputs + outputs <= 20 (and the contraction
// refuses to build intermediate tensors of rank > 26).
LinearMap evaluate_tensor(const ZxDiagram& g);

// True iff a nonzero lambda exists with max|a - lambda*b| within
// tol * max(max|a|, max|b|); lambda is read off the largest-magnitude
// entry pair. Throws on dimension mismatch.
bool equivalent_up_to_scalar(const LinearMap& a, const LinearMap& b, double tol);

}  // namespace topols::zx
