#include "pi0/involution.hpp"

#include <utility>

namespace pi0 {

InvolutiveLattice::InvolutiveLattice(IntegerMatrix sigma) : sigma_(std::move(sigma)) {
    if (!sigma_.is_square())
        throw validation_error("involution: sigma must be square");
    if (!(sigma_ * sigma_).is_identity())
        throw validation_error("involution: sigma^2 != identity");
}

LatticeBasis plus_lattice(const InvolutiveLattice& l) {
    return kernel_lattice(l.sigma() - IntegerMatrix::identity(l.rank()));
}

LatticeBasis minus_lattice(const InvolutiveLattice& l) {
    return kernel_lattice(l.sigma() + IntegerMatrix::identity(l.rank()));
}

LatticeBasis doubled_projection_plus(const InvolutiveLattice& l) {
    IntegerMatrix m = IntegerMatrix::identity(l.rank()) + l.sigma();
    // image of Z^n under m = column span = row span of m^T
    return LatticeBasis::from_generators(m.transposed());
}

LatticeBasis doubled_projection_minus(const InvolutiveLattice& l) {
    IntegerMatrix m = IntegerMatrix::identity(l.rank()) - l.sigma();
    return LatticeBasis::from_generators(m.transposed());
}

bool sandwich_check(const InvolutiveLattice& l) {
    const LatticeBasis plus = plus_lattice(l);
    const LatticeBasis minus = minus_lattice(l);
    const LatticeBasis dplus = doubled_projection_plus(l);
    const LatticeBasis dminus = doubled_projection_minus(l);
    return dplus.contains(plus.scaled(2)) && plus.contains(dplus) &&
           dminus.contains(minus.scaled(2)) && minus.contains(dminus);
}

TorusShape classify_torus(const InvolutiveLattice& l) {
    const LatticeBasis plus = plus_lattice(l);
    const LatticeBasis minus = minus_lattice(l);
    const LatticeBasis dplus = doubled_projection_plus(l);

    std::vector<Int> inv;
    try {
        inv = quotient_invariants(dplus, plus.scaled(2));
    } catch (const validation_error&) {
        throw consistency_error("classify_torus: 2 L_+ not contained in (I+sigma) Z^n");
    }

    Int index = 1;
    for (const Int& d : inv) {
        if (d == 0)
            throw consistency_error("classify_torus: projection/eigenlattice index is infinite");
        index *= d;
    }
    // the index must be a power of two; its log is the swap count
    std::size_t c = 0;
    Int t = index;
    while (t > 1) {
        if (t % 2 != 0)
            throw consistency_error("classify_torus: index " + index.get_str() +
                                    " is not a power of two");
        t /= 2;
        ++c;
    }

    if (plus.rank() < c || minus.rank() < c ||
        plus.rank() + minus.rank() != l.rank())
        throw consistency_error("classify_torus: eigenlattice ranks inconsistent");

    TorusShape shape;
    shape.split = plus.rank() - c;
    shape.anisotropic = minus.rank() - c;
    shape.swap_pairs = c;
    return shape;
}

} // namespace pi0
