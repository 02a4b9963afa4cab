/**
 * Barcode export: CSV (`dim,birth,death` with an `inf` literal) and a
 * minimal hand-rolled SVG with horizontal bars grouped by dimension.
 * The axis scale is selectable: `diameter` plots the raw Rips filtration
 * values (pairwise distances); `ball` divides them by two, the radius at
 * which the two balls touch.
 */

#pragma once

#include "btda/persistence.hpp"

#include <iosfwd>

namespace btda {

enum class radius_scale { ball, diameter };

/// Positive-length and infinite intervals, sorted (dim, birth, death).
void write_barcode_csv(const barcode& b, std::ostream& os);

/// Top bars per dimension as horizontal lines; infinite bars run to the
/// right edge with an open marker. axis_max <= 0 picks the data maximum.
void write_barcode_svg(const barcode& b, std::ostream& os, radius_scale scale,
                       std::size_t top_per_dim = 20, double axis_max = 0.0);

} // namespace btda
