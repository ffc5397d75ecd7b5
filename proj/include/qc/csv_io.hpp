#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qc/bounds.hpp"
#include "qc/grid.hpp"
#include "qc/layer.hpp"

namespace qc {

// "# key=value" metadata lines; every file starts with these, then one
// header row, then data.  Numbers use 17 significant digits and LF endings
// so identical inputs give byte-identical files.
using CsvMeta = std::vector<std::pair<std::string, std::string>>;

std::string format_double(double x);

void write_solution_csv(std::ostream& os, const ScalarField& y, const CsvMeta& meta);

void write_gradient_csv(std::ostream& os, const ScalarField& d1,
                        const ScalarField& d2, const CsvMeta& meta);

void write_rate_csv(std::ostream& os, const RateTable& table, const CsvMeta& meta);

void write_bounds_csv(std::ostream& os, const std::vector<BoundReport>& reports,
                      const CsvMeta& meta);

// Layer forces: one row per interface layer m with the common force
// components on that layer.
void write_ghost_csv(std::ostream& os, const ScalarField& F1,
                     const ScalarField& F2, const CsvMeta& meta);

// ASCII PGM (P2), maxval 255: marked nodes white (255), others black.
// Columns follow m in [-M, M] left to right; rows follow n from +N (top)
// down to -N, so the image is oriented like a plot of the lattice.
void write_pgm(std::ostream& os, const BoolField& chi);

}  // namespace qc
