#pragma once

#include "novikov/big_complex.hpp"
#include "novikov/rational_function.hpp"

#include <cstddef>
#include <vector>

namespace novikov {

using RFVector = std::vector<RationalFunction>;
using RFMatrix = std::vector<RFVector>;

struct Echelon {
    RFMatrix rows;                      // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;    // pivot column of each row
};

/// Reduced row echelon form. Elimination is fraction-free over the polynomial ring
/// (rows are cleared of denominators first); pivots are the lowest-index nonzero
/// entries, so the output is deterministic.
Echelon row_reduce(const RFMatrix& rows, std::size_t ncols);

std::size_t rank(const RFMatrix& rows, std::size_t ncols);

/// Basis of {x : rows * x = 0}; one vector per free column, with a 1 in that column.
RFMatrix nullspace(const RFMatrix& rows, std::size_t ncols);

bool in_span(const RFMatrix& basis, const RFVector& v);
bool same_span(const RFMatrix& a, const RFMatrix& b, std::size_t ncols);
/// Basis of span(a) ∩ span(b), expressed in ambient coordinates.
RFMatrix intersection(const RFMatrix& a, const RFMatrix& b, std::size_t ncols);
/// Vectors of `candidates`, in order, that extend `base` to a larger independent set.
RFMatrix extend_basis(const RFMatrix& base, const RFMatrix& candidates, std::size_t ncols);

RationalFunction determinant(const RFMatrix& m);
/// Throws std::domain_error("singular matrix").
RFMatrix inverse(const RFMatrix& m);

using ComplexMatrix = std::vector<std::vector<BigComplex>>;

/// Gauss-Jordan with partial pivoting. Throws std::domain_error when a pivot has
/// modulus below `tolerance`.
ComplexMatrix inverse(const ComplexMatrix& m, const BigFloat& tolerance);

}  // namespace novikov
