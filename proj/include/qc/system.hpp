#pragma once
#include <vector>

#include "qc/grid.hpp"

namespace qc {

// Sparse linear system A x = rhs in CSR form.  Rows follow the unknown
// numbering of the grid (or plain m-offset numbering for 1D chains).
struct StencilSystem {
    GridSpec grid;            // grid.N == 0 marks a 1D chain over m in (-M, M)
    bool one_dimensional = false;
    int n = 0;
    std::vector<int> row_ptr;
    std::vector<int> col;
    std::vector<double> val;
    std::vector<double> rhs;

    double entry(int i, int j) const {
        for (int p = row_ptr[i]; p < row_ptr[i + 1]; ++p)
            if (col[p] == j) return val[p];
        return 0.0;
    }
    double diag(int i) const { return entry(i, i); }
};

// Row-by-row builder; duplicate columns within a row are summed.
class SystemBuilder {
public:
    explicit SystemBuilder(int n_rows) { sys_.n = n_rows; sys_.row_ptr.reserve(n_rows + 1); sys_.row_ptr.push_back(0); sys_.rhs.assign(n_rows, 0.0); }

    void begin_row() { row_cols_.clear(); row_vals_.clear(); }
    void add(int j, double v) {
        for (size_t q = 0; q < row_cols_.size(); ++q)
            if (row_cols_[q] == j) { row_vals_[q] += v; return; }
        row_cols_.push_back(j);
        row_vals_.push_back(v);
    }
    void end_row(double rhs_value) {
        // insertion-sort columns for a canonical layout
        for (size_t a = 1; a < row_cols_.size(); ++a)
            for (size_t b = a; b > 0 && row_cols_[b - 1] > row_cols_[b]; --b) {
                std::swap(row_cols_[b - 1], row_cols_[b]);
                std::swap(row_vals_[b - 1], row_vals_[b]);
            }
        sys_.col.insert(sys_.col.end(), row_cols_.begin(), row_cols_.end());
        sys_.val.insert(sys_.val.end(), row_vals_.begin(), row_vals_.end());
        sys_.row_ptr.push_back(static_cast<int>(sys_.col.size()));
        sys_.rhs[sys_.row_ptr.size() - 2] = rhs_value;
    }
    StencilSystem take() { return std::move(sys_); }

private:
    StencilSystem sys_;
    std::vector<int> row_cols_;
    std::vector<double> row_vals_;
};

inline void apply(const StencilSystem& s, const double* x, double* out) {
    for (int i = 0; i < s.n; ++i) {
        double acc = 0.0;
        for (int p = s.row_ptr[i]; p < s.row_ptr[i + 1]; ++p)
            acc += s.val[p] * x[s.col[p]];
        out[i] = acc;
    }
}

inline std::vector<double> residual(const StencilSystem& s, const std::vector<double>& x) {
    std::vector<double> r(s.n);
    apply(s, x.data(), r.data());
    for (int i = 0; i < s.n; ++i) r[i] = s.rhs[i] - r[i];
    return r;
}

// 0.5 x^T A x - rhs^T x
inline double quadratic_energy(const StencilSystem& s, const std::vector<double>& x) {
    std::vector<double> ax(s.n);
    apply(s, x.data(), ax.data());
    double e = 0.0;
    for (int i = 0; i < s.n; ++i) e += 0.5 * x[i] * ax[i] - s.rhs[i] * x[i];
    return e;
}

} // namespace qc
