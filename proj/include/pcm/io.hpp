#pragma once

#include <string>

#include "pcm/indices.hpp"
#include "pcm/matrix.hpp"

namespace pcm {

/// Formats a double with 17 significant digits (round-trip exact).
std::string fmt_full(double v);

/// Formats a double with 12 significant digits (display precision).
std::string fmt_display(double v);

/// Parses a full n-by-n grid of comma-separated decimal literals, one row per
/// line, no header, then validates it via ComparisonMatrix::from_grid with
/// the default reciprocity tolerance.
ComparisonMatrix parse_matrix_csv(const std::string& text, double reciprocity_tol = 1e-6);

ComparisonMatrix read_matrix_csv(const std::string& path, double reciprocity_tol = 1e-6);

/// Emits the full grid, 17 significant digits per entry.
std::string matrix_to_csv(const ComparisonMatrix& a);

void write_matrix_csv(const ComparisonMatrix& a, const std::string& path);

/// Random Index table format: "n,RI" rows, optionally followed by a trailing
/// metadata row "provenance,monte-carlo,<seed>,<samples>".
RandomIndexTable parse_ri_table(const std::string& text);
RandomIndexTable read_ri_table(const std::string& path);
std::string ri_table_to_csv(const RandomIndexTable& table);
void write_ri_table(const RandomIndexTable& table, const std::string& path);

}  // namespace pcm
