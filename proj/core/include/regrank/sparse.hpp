#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "regrank/metapath.hpp"

namespace regrank {

// Row-major compressed sparse matrix. All stored weights are positive;
// absent entries are exactly zero.
struct SparseMatrix {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<std::size_t> row_ptr; // rows + 1
    std::vector<std::uint32_t> col;
    std::vector<double> val;

    std::size_t nnz() const { return col.size(); }

    double at(std::uint32_t r, std::uint32_t c) const; // 0.0 when absent
    double row_sum(std::uint32_t r) const;
    std::vector<double> row_sums() const;

    // Divides each row by `factors[r]`; rows with factor 0 are left empty.
    void scale_rows(std::span<const double> factors);

    bool operator==(const SparseMatrix& other) const = default;
};

class SparseMatrixBuilder {
public:
    SparseMatrixBuilder(std::uint32_t rows, std::uint32_t cols);
    void add(std::uint32_t r, std::uint32_t c, double v);
    SparseMatrix build(); // sorts within rows, merges duplicates, drops zeros

private:
    std::uint32_t rows_, cols_;
    std::vector<std::vector<std::pair<std::uint32_t, double>>> entries_;
};

// Sparse product, never densified; exact zeros are pruned from the result.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

SparseMatrix identity_matrix(std::uint32_t n);

// A sparse transition matrix together with the node-type domains its rows
// and columns range over.
struct TypedMatrix {
    SparseMatrix m;
    NodeType row_type;
    NodeType col_type;
};

} // namespace regrank
