#include "regrank/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace regrank {

double SparseMatrix::at(std::uint32_t r, std::uint32_t c) const {
    for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
        if (col[k] == c) return val[k];
    }
    return 0.0;
}

double SparseMatrix::row_sum(std::uint32_t r) const {
    double s = 0.0;
    for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) s += val[k];
    return s;
}

std::vector<double> SparseMatrix::row_sums() const {
    std::vector<double> out(rows, 0.0);
    for (std::uint32_t r = 0; r < rows; ++r) out[r] = row_sum(r);
    return out;
}

void SparseMatrix::scale_rows(std::span<const double> factors) {
    assert(factors.size() == rows);
    for (std::uint32_t r = 0; r < rows; ++r) {
        if (factors[r] == 0.0) continue;
        for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) val[k] /= factors[r];
    }
}

SparseMatrixBuilder::SparseMatrixBuilder(std::uint32_t rows, std::uint32_t cols)
    : rows_(rows), cols_(cols), entries_(rows) {}

void SparseMatrixBuilder::add(std::uint32_t r, std::uint32_t c, double v) {
    assert(r < rows_ && c < cols_);
    entries_[r].emplace_back(c, v);
}

SparseMatrix SparseMatrixBuilder::build() {
    SparseMatrix m;
    m.rows = rows_;
    m.cols = cols_;
    m.row_ptr.assign(rows_ + 1, 0);
    std::size_t total = 0;
    for (auto& row : entries_) {
        std::sort(row.begin(), row.end());
        total += row.size();
    }
    m.col.reserve(total);
    m.val.reserve(total);
    for (std::uint32_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < entries_[r].size();) {
            std::uint32_t c = entries_[r][k].first;
            double v = 0.0;
            while (k < entries_[r].size() && entries_[r][k].first == c) v += entries_[r][k++].second;
            if (v != 0.0) {
                m.col.push_back(c);
                m.val.push_back(v);
            }
        }
        m.row_ptr[r + 1] = m.col.size();
    }
    return m;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("sparse multiply: inner dimension mismatch");

    SparseMatrix m;
    m.rows = a.rows;
    m.cols = b.cols;
    m.row_ptr.assign(a.rows + 1, 0);

    std::vector<double> acc(b.cols, 0.0);
    std::vector<std::uint32_t> touched;
    for (std::uint32_t r = 0; r < a.rows; ++r) {
        touched.clear();
        for (std::size_t ka = a.row_ptr[r]; ka < a.row_ptr[r + 1]; ++ka) {
            std::uint32_t mid = a.col[ka];
            double av = a.val[ka];
            for (std::size_t kb = b.row_ptr[mid]; kb < b.row_ptr[mid + 1]; ++kb) {
                std::uint32_t c = b.col[kb];
                if (acc[c] == 0.0) touched.push_back(c);
                acc[c] += av * b.val[kb];
            }
        }
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t c : touched) {
            if (acc[c] != 0.0) { // prune exact zeros
                m.col.push_back(c);
                m.val.push_back(acc[c]);
            }
            acc[c] = 0.0;
        }
        m.row_ptr[r + 1] = m.col.size();
    }
    return m;
}

SparseMatrix identity_matrix(std::uint32_t n) {
    SparseMatrix m;
    m.rows = m.cols = n;
    m.row_ptr.resize(n + 1);
    m.col.resize(n);
    m.val.assign(n, 1.0);
    for (std::uint32_t i = 0; i < n; ++i) {
        m.row_ptr[i + 1] = i + 1;
        m.col[i] = i;
    }
    return m;
}

} // namespace regrank
