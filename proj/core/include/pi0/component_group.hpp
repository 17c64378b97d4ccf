#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pi0/involution.hpp"

namespace pi0 {

/// Input data for the component-group computation: the lattice-with-
/// involution (L, sigma) and a sigma-stable sublattice generated by the
/// coroot rows. Validated on construction:
///   - sigma^2 = I,
///   - every coroot has length rank,
///   - the coroot lattice is stable under sigma.
class RealGroupSpec {
public:
    RealGroupSpec(InvolutiveLattice lattice, IntegerMatrix coroots, std::string name = "");

    /// Spec with no coroots (tori, abelian varieties).
    static RealGroupSpec torus(InvolutiveLattice lattice, std::string name = "");

    std::size_t rank() const noexcept { return lattice_.rank(); }
    const InvolutiveLattice& lattice() const noexcept { return lattice_; }
    const IntegerMatrix& coroots() const noexcept { return coroots_; }
    const std::string& name() const noexcept { return name_; }

    /// Canonical basis of the lattice spanned by the coroot rows.
    const LatticeBasis& coroot_lattice() const noexcept { return coroot_lattice_; }

private:
    InvolutiveLattice lattice_;
    IntegerMatrix coroots_;
    LatticeBasis coroot_lattice_;
    std::string name_;
};

/// pi_0 G(R) as an elementary abelian 2-group: rank r means (Z/2)^r.
/// `representatives` are the r coset generators lambda in L_+, reduced to
/// the canonical representative of their coset; the component they name is
/// the point exp(pi i lambda). An empty list (never a zero vector) encodes
/// the connected case.
struct Pi0Result {
    std::size_t rank = 0;
    std::vector<Int> invariant_factors;               // of L_+/(2Lt_+ + Qv_+), all in {1,2}
    std::vector<std::vector<Int>> representatives;    // ambient coordinates
    std::size_t order_log2() const noexcept { return rank; }
};

/// Main computation: L_+ / ((I+sigma)Z^n + Qv_+).
Pi0Result pi0(const RealGroupSpec& spec);

/// H^1 of the Galois action on i*L/i*Qv via the lattice formula, carried out
/// in doubled coordinates:
///   numerator (Z^1 side):  2Z^n  cap  ((I+sigma)Z^n + Qv_-)
///   denominator (B^1 side): 2 * ((I+sigma)Z^n + Qv)
/// Both lattices are exposed for oracle comparison; dividing coordinates by
/// two recovers the undoubled statement.
struct H1Result {
    std::vector<Int> invariant_factors;
    LatticeBasis cocycle_lattice_doubled;
    LatticeBasis coboundary_lattice_doubled;
};

H1Result h1_gamma(const RealGroupSpec& spec);

/// Human-readable description of the component represented by lambda.
struct ComponentRepresentative {
    std::vector<Int> lambda;
    std::vector<std::string> exponent_halves;   // coordinates of lambda/2, reduced fractions
    std::vector<int> point_signs;               // coordinates of exp(pi i lambda) = ((-1)^lambda_j)
    std::string text;
};

/// Requires sigma(lambda) = lambda (throws validation_error otherwise).
ComponentRepresentative representative_description(const InvolutiveLattice& l,
                                                   const std::vector<Int>& lambda);

/// Block sum: block-diagonal sigma, concatenated (zero-padded) coroots.
RealGroupSpec direct_sum(const RealGroupSpec& a, const RealGroupSpec& b);

} // namespace pi0
