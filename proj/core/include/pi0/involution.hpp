#pragma once

#include <cstddef>

#include "pi0/lattice.hpp"

namespace pi0 {

/// The lattice Z^n together with an integral involution sigma (sigma^2 = I),
/// acting on column vectors. sigma is validated at construction; everything
/// downstream assumes it.
class InvolutiveLattice {
public:
    explicit InvolutiveLattice(IntegerMatrix sigma);

    std::size_t rank() const noexcept { return sigma_.rows(); }
    const IntegerMatrix& sigma() const noexcept { return sigma_; }

    bool operator==(const InvolutiveLattice& other) const { return sigma_ == other.sigma_; }

private:
    IntegerMatrix sigma_;
};

/// Fixed eigenlattice: { x : sigma x = x }, saturated.
LatticeBasis plus_lattice(const InvolutiveLattice& l);

/// Negated eigenlattice: { x : sigma x = -x }, saturated.
LatticeBasis minus_lattice(const InvolutiveLattice& l);

/// Twice the projection lattice in the +1 eigenspace, i.e. the image
/// (I + sigma) Z^n. Working with the doubled lattice keeps everything
/// integral; the projection itself would have half-integer coordinates.
LatticeBasis doubled_projection_plus(const InvolutiveLattice& l);

/// The minus analogue: (I - sigma) Z^n.
LatticeBasis doubled_projection_minus(const InvolutiveLattice& l);

/// Verifies the inclusion chain (in doubled coordinates)
///   2 L_+  <=  (I+sigma) Z^n  <=  L_+
/// and its minus analogue. True for every valid involution; exposed as a
/// self-test hook rather than a filter.
bool sandwich_check(const InvolutiveLattice& l);

/// Multiplicities of the three indecomposable integral involutions:
/// `split` copies of (+1), `anisotropic` copies of (-1) and `swap_pairs`
/// 2x2 coordinate swaps. The real torus with this cocharacter involution is
/// (R^x)^split x (U_1)^anisotropic x (C^x)^swap_pairs.
struct TorusShape {
    std::size_t split = 0;
    std::size_t anisotropic = 0;
    std::size_t swap_pairs = 0;

    bool operator==(const TorusShape&) const = default;
};

/// Recover the multiplicities from numeric invariants: the swap count is
/// log2 of the index [(I+sigma)Z^n : 2 L_+]; ranks of the eigenlattices give
/// the rest. Throws consistency_error if the numbers cannot be reconciled.
TorusShape classify_torus(const InvolutiveLattice& l);

} // namespace pi0
