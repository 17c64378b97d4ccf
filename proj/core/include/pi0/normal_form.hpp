#pragma once

#include <vector>

#include "pi0/integer_matrix.hpp"

namespace pi0 {

/// Row-style Hermite normal form: h = transform * input with
/// |det(transform)| = 1. Convention used throughout the library:
///   - zero rows at the bottom,
///   - pivots positive, pivot columns strictly increasing,
///   - every entry above a pivot reduced into [0, pivot).
/// The form is the canonical representative of the row lattice, so two
/// matrices span the same lattice iff their HNFs are identical.
struct HermiteNormalForm {
    IntegerMatrix h;
    IntegerMatrix transform;
};

HermiteNormalForm hnf(const IntegerMatrix& m);

/// Smith normal form: left * input * right = diag(invariant_factors),
/// both transforms unimodular, d1 | d2 | ... | dr, all factors >= 0,
/// trailing zeros when the matrix is rank deficient. The list always has
/// min(rows, cols) entries.
struct SmithNormalForm {
    std::vector<Int> invariant_factors;
    IntegerMatrix left;
    IntegerMatrix right;
};

SmithNormalForm snf(const IntegerMatrix& m);

/// Inverse of a unimodular matrix (throws consistency_error otherwise).
IntegerMatrix unimodular_inverse(const IntegerMatrix& u);

} // namespace pi0
