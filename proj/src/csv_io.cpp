#include "qc/csv_io.hpp"

#include <cstdio>

namespace qc {

namespace {

void write_meta(std::ostream& os, const CsvMeta& meta) {
    for (const auto& [key, value] : meta) os << "# " << key << "=" << value << "\n";
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_solution_csv(std::ostream& os, const ScalarField& y, const CsvMeta& meta) {
    write_meta(os, meta);
    os << "m,n,x1,x2,y\n";
    const GridSpec& g = y.grid;
    for (int m = -g.M; m <= g.M; ++m)
        for (int n = -g.N; n <= g.N; ++n) {
            auto [x1, x2] = physical_position(m, n, g);
            os << m << "," << n << "," << format_double(x1) << ","
               << format_double(x2) << "," << format_double(y(m, n)) << "\n";
        }
}

void write_gradient_csv(std::ostream& os, const ScalarField& d1,
                        const ScalarField& d2, const CsvMeta& meta) {
    write_meta(os, meta);
    os << "m,n,ds1,ds2\n";
    const GridSpec& g = d1.grid;
    for (int m = -g.M; m <= g.M; ++m)
        for (int n = -g.N; n <= g.N; ++n)
            os << m << "," << n << "," << format_double(d1(m, n)) << ","
               << format_double(d2(m, n)) << "\n";
}

void write_rate_csv(std::ostream& os, const RateTable& table, const CsvMeta& meta) {
    write_meta(os, meta);
    os << "eps,width\n";
    for (const auto& row : table.rows)
        os << format_double(row.eps) << "," << format_double(row.width) << "\n";
    os << "# rate=" << format_double(table.fitted_rate) << "\n";
}

void write_bounds_csv(std::ostream& os, const std::vector<BoundReport>& reports,
                      const CsvMeta& meta) {
    write_meta(os, meta);
    os << "name,k,M,N,lhs,rhs,slack,satisfied\n";
    for (const auto& r : reports)
        os << r.name << "," << r.k << "," << r.M << "," << r.N << ","
           << format_double(r.lhs) << "," << format_double(r.rhs) << ","
           << format_double(r.slack) << "," << (r.satisfied ? 1 : 0) << "\n";
}

void write_ghost_csv(std::ostream& os, const ScalarField& F1,
                     const ScalarField& F2, const CsvMeta& meta) {
    write_meta(os, meta);
    os << "m,F1,F2\n";
    const GridSpec& g = F1.grid;
    for (int m = -g.M + 1; m <= g.M - 1; ++m)
        os << m << "," << format_double(F1(m, 0)) << ","
           << format_double(F2(m, 0)) << "\n";
}

void write_pgm(std::ostream& os, const BoolField& chi) {
    const GridSpec& g = chi.grid;
    int w = 2 * g.M + 1, h = 2 * g.N + 1;
    os << "P2\n" << w << " " << h << "\n255\n";
    for (int n = g.N; n >= -g.N; --n) {
        int on_line = 0;
        for (int m = -g.M; m <= g.M; ++m) {
            os << (chi(m, n) ? 255 : 0);
            // keep lines under the 70-character limit of the format
            if (++on_line == 17 || m == g.M) {
                os << "\n";
                on_line = 0;
            } else {
                os << " ";
            }
        }
    }
}

}  // namespace qc
