#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pi0/integer_matrix.hpp"
#include "pi0/normal_form.hpp"

namespace pi0 {

/// A sublattice of Z^n, stored as the rows of its canonical Hermite normal
/// form (zero rows dropped). Equal lattices therefore compare equal as
/// values. An empty row set denotes the zero lattice; rank-deficient and
/// full lattices are both ordinary values here.
class LatticeBasis {
public:
    /// Zero lattice inside Z^ambient.
    explicit LatticeBasis(std::size_t ambient_rank) : ambient_(ambient_rank), mat_(0, ambient_rank) {}

    static LatticeBasis zero(std::size_t ambient_rank) { return LatticeBasis(ambient_rank); }
    static LatticeBasis full(std::size_t ambient_rank);

    /// Canonicalize an arbitrary generator list (rows of `generators`).
    static LatticeBasis from_generators(const IntegerMatrix& generators);
    static LatticeBasis from_generators(const std::vector<std::vector<Int>>& generators,
                                        std::size_t ambient_rank);

    std::size_t ambient_rank() const noexcept { return ambient_; }
    std::size_t rank() const noexcept { return mat_.rows(); }

    /// Basis vectors as rows, in HNF.
    const IntegerMatrix& basis() const noexcept { return mat_; }
    std::vector<Int> vector_at(std::size_t i) const { return mat_.row(i); }

    /// Pivot column of basis row i.
    std::size_t pivot(std::size_t i) const { return pivots_[i]; }

    /// Integer coordinates of v in this basis, or nullopt if v is not a
    /// member of the lattice.
    std::optional<std::vector<Int>> coordinates_of(const std::vector<Int>& v) const;

    bool contains(const std::vector<Int>& v) const { return coordinates_of(v).has_value(); }
    bool contains(const LatticeBasis& sub) const;

    /// The lattice scaled by an integer factor.
    LatticeBasis scaled(const Int& factor) const;

    bool operator==(const LatticeBasis& other) const {
        return ambient_ == other.ambient_ && mat_ == other.mat_;
    }

private:
    std::size_t ambient_;
    IntegerMatrix mat_;
    std::vector<std::size_t> pivots_;
};

/// Basis of the full integer kernel {x in Z^cols : M x = 0}. The result is
/// saturated: any rational kernel vector with integer entries lies in it.
LatticeBasis kernel_lattice(const IntegerMatrix& m);

/// Sum A + B (smallest lattice containing both). Ambient ranks must agree.
LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b);

/// Exact intersection, computed from the left kernel of the stacked bases.
LatticeBasis lattice_intersect(const LatticeBasis& a, const LatticeBasis& b);

/// Image lattice {M v : v in L}.
LatticeBasis map_lattice(const IntegerMatrix& m, const LatticeBasis& l);

/// Canonical coset representative of v modulo L: at every pivot column of
/// L's basis the coordinate is reduced into [0, pivot).
std::vector<Int> reduce_mod_lattice(std::vector<Int> v, const LatticeBasis& l);

/// Structure of the abelian group super/sub.
///   invariant_factors: one entry per basis vector of super (so exactly
///     super.rank() entries); factor 0 marks a free Z summand.
///   generator_coords: for each factor, the coordinates (in super's basis)
///     of a group element generating that cyclic summand, reduced to the
///     canonical representative modulo sub.
/// Requires sub to be contained in super; the offending generator is named
/// otherwise.
struct QuotientStructure {
    std::vector<Int> invariant_factors;
    std::vector<std::vector<Int>> generator_coords;
};

QuotientStructure quotient_structure(const LatticeBasis& super, const LatticeBasis& sub);

/// Invariant factors of super/sub (see QuotientStructure).
std::vector<Int> quotient_invariants(const LatticeBasis& super, const LatticeBasis& sub);

/// Drop unit factors, keeping only the invariant factors > 1 or = 0.
std::vector<Int> nontrivial_factors(const std::vector<Int>& factors);

} // namespace pi0
