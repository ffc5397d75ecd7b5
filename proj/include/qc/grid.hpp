#pragma once
#include <stdexcept>
#include <utility>
#include <vector>

namespace qc {

enum class Model { Triangular, Square };
enum class BC { PeriodicX2, Dirichlet, DirichletPadded };

// Index rectangle m in [-M,M], n in [-N,N] with lattice spacing eps = 1/(2M).
// Unknowns are the interior nodes; the outer ring (m = +-M, n = +-N and the
// phantom column m = M+1 / double ring n = +-(N+1) reached by second-neighbor
// bonds) is pinned to zero under Dirichlet, so any coupling that leaves the
// free set is simply dropped during assembly.
struct GridSpec {
    int M = 0;
    int N = 0;
    double eps = 0.0;
    Model model = Model::Square;
    BC bc = BC::Dirichlet;

    int row_count() const { return 2 * M + 1; }
    int col_count() const { return 2 * N + 1; }

    int free_m_count() const { return 2 * M - 1; }
    int free_n_count() const { return bc == BC::PeriodicX2 ? 2 * N : 2 * N - 1; }
    int n_unknowns() const { return free_m_count() * free_n_count(); }

    int wrap_n(int n) const {
        int p = 2 * N;
        int r = n % p;
        return r < 0 ? r + p : r;
    }

    // dense unknown index for lattice node (m,n), or -1 if constrained
    int unknown_index(int m, int n) const {
        if (m <= -M || m >= M) return -1;
        if (bc == BC::PeriodicX2)
            return (m + M - 1) * free_n_count() + wrap_n(n);
        if (n <= -N || n >= N) return -1;
        return (m + M - 1) * free_n_count() + (n + N - 1);
    }
};

GridSpec build_grid(int M, int N, Model model, BC bc);

// Visit free nodes in increasing unknown-index order.  Periodic columns are
// visited by wrapped index j, reported as the lattice coordinate in [-N, N).
template <class F>
void for_each_free_node(const GridSpec& g, F&& fn) {
    for (int m = -g.M + 1; m <= g.M - 1; ++m) {
        if (g.bc == BC::PeriodicX2) {
            for (int j = 0; j < 2 * g.N; ++j)
                fn(m, j < g.N ? j : j - 2 * g.N);
        } else {
            for (int n = -g.N + 1; n <= g.N - 1; ++n)
                fn(m, n);
        }
    }
}

struct ScalarField {
    GridSpec grid;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(const GridSpec& g)
        : grid(g), v(static_cast<size_t>(g.row_count()) * g.col_count(), 0.0) {}

    size_t flat(int m, int n) const {
        return static_cast<size_t>(m + grid.M) * grid.col_count() + (n + grid.N);
    }
    double operator()(int m, int n) const { return v[flat(m, n)]; }
    double& at(int m, int n) { return v[flat(m, n)]; }
};

// Scatter an unknown vector back onto the full rectangle (constrained nodes 0;
// periodic runs copy n = -N from n = N so the wrap is visible in the output).
ScalarField field_from_unknowns(const GridSpec& g, const std::vector<double>& u);
std::vector<double> unknowns_from_field(const ScalarField& f);

// (y((m,n)+s) - y(m,n))/eps where the target stays inside the rectangle, 0 outside.
ScalarField forward_difference(const ScalarField& y, int dm, int dn);

std::pair<double, double> physical_position(int m, int n, const GridSpec& g);

} // namespace qc
