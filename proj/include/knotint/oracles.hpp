// Classical computations of the target invariants, on code paths fully
// disjoint from the curve engine: Kauffman bracket state sum, reduced Burau
// determinant, and the R-matrix state sum for the coloured Jones polynomial.

#pragma once

#include "knotint/braid.hpp"
#include "knotint/intersect.hpp"
#include "knotint/ring.hpp"

namespace knotint {

// Normalised Jones polynomial of the braid closure via the bracket state sum
// over all smoothings (capped by caps.bracket_letters).
LaurentPoly jones_kauffman(const BraidWord& b, const Caps& caps = {});

// Symmetrised Alexander polynomial of a knot closure via the reduced Burau
// determinant; throws std::invalid_argument for multi-component closures.
LaurentPoly alexander_burau(const BraidWord& b);

// N-th coloured Jones polynomial of the closure via the U_q(sl2) R-matrix on
// the N-dimensional irreducible module, unknot-normalised, matched to the
// Kauffman convention at N = 2.
LaurentPoly colored_jones_rmatrix(const BraidWord& b, int N, const Caps& caps = {});

}  // namespace knotint
