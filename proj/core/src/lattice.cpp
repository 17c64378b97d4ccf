#include "pi0/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace pi0 {

namespace {

std::vector<std::size_t> find_pivots(const IntegerMatrix& hnf_rows) {
    std::vector<std::size_t> pivots(hnf_rows.rows());
    for (std::size_t i = 0; i < hnf_rows.rows(); ++i) {
        std::size_t j = 0;
        while (j < hnf_rows.cols() && hnf_rows(i, j) == 0) ++j;
        pivots[i] = j;
    }
    return pivots;
}

std::string vec_to_string(const std::vector<Int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << v[i];
        if (i + 1 < v.size()) os << ", ";
    }
    os << ')';
    return os.str();
}

} // namespace

LatticeBasis LatticeBasis::full(std::size_t ambient_rank) {
    LatticeBasis l(ambient_rank);
    l.mat_ = IntegerMatrix::identity(ambient_rank);
    l.pivots_ = find_pivots(l.mat_);
    return l;
}

LatticeBasis LatticeBasis::from_generators(const IntegerMatrix& generators) {
    HermiteNormalForm h = hnf(generators);
    std::size_t nonzero = h.h.rows();
    while (nonzero > 0) {
        bool zero = true;
        for (std::size_t j = 0; j < h.h.cols() && zero; ++j)
            if (h.h(nonzero - 1, j) != 0) zero = false;
        if (!zero) break;
        --nonzero;
    }
    LatticeBasis l(generators.cols());
    IntegerMatrix top(nonzero, generators.cols());
    for (std::size_t i = 0; i < nonzero; ++i)
        for (std::size_t j = 0; j < generators.cols(); ++j) top(i, j) = h.h(i, j);
    l.mat_ = std::move(top);
    l.pivots_ = find_pivots(l.mat_);
    return l;
}

LatticeBasis LatticeBasis::from_generators(const std::vector<std::vector<Int>>& generators,
                                           std::size_t ambient_rank) {
    return from_generators(IntegerMatrix::from_rows(generators, ambient_rank));
}

std::optional<std::vector<Int>> LatticeBasis::coordinates_of(const std::vector<Int>& v) const {
    if (v.size() != ambient_)
        throw validation_error("coordinates_of: ambient rank mismatch");
    std::vector<Int> w = v;
    std::vector<Int> coords(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        const std::size_t p = pivots_[i];
        const Int& piv = mat_(i, p);
        if (w[p] % piv != 0) return std::nullopt;
        Int q = w[p] / piv;
        if (q != 0)
            for (std::size_t j = p; j < ambient_; ++j) w[j] -= q * mat_(i, j);
        coords[i] = std::move(q);
    }
    for (const Int& e : w)
        if (e != 0) return std::nullopt;
    return coords;
}

bool LatticeBasis::contains(const LatticeBasis& sub) const {
    if (sub.ambient_rank() != ambient_)
        throw validation_error("contains: ambient rank mismatch");
    for (std::size_t i = 0; i < sub.rank(); ++i)
        if (!contains(sub.vector_at(i))) return false;
    return true;
}

LatticeBasis LatticeBasis::scaled(const Int& factor) const {
    if (factor == 0) return zero(ambient_);
    IntegerMatrix gens = mat_;
    for (std::size_t i = 0; i < gens.rows(); ++i)
        for (std::size_t j = 0; j < gens.cols(); ++j) gens(i, j) *= factor;
    return from_generators(gens);
}

LatticeBasis kernel_lattice(const IntegerMatrix& m) {
    // H = U * m^T; rows of U facing zero rows of H satisfy u * m^T = 0,
    // i.e. m u^T = 0. They extend to a basis of Z^cols, so the kernel they
    // span is saturated, and a rank count shows it is the whole kernel.
    HermiteNormalForm h = hnf(m.transposed());
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < h.h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.h.cols() && zero; ++j)
            if (h.h(i, j) != 0) zero = false;
        if (zero) gens.push_back(h.transform.row(i));
    }
    return LatticeBasis::from_generators(gens, m.cols());
}

LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw validation_error("lattice_sum: ambient rank mismatch");
    return LatticeBasis::from_generators(IntegerMatrix::vstack(a.basis(), b.basis()));
}

LatticeBasis lattice_intersect(const LatticeBasis& a, const LatticeBasis& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw validation_error("lattice_intersect: ambient rank mismatch");
    const std::size_t n = a.ambient_rank();
    if (a.rank() == 0 || b.rank() == 0) return LatticeBasis::zero(n);
    // (alpha | beta) in the left kernel of [A; B]  <=>  alpha*A = -beta*B,
    // so the alpha*A span exactly A cap B.
    IntegerMatrix stacked = IntegerMatrix::vstack(a.basis(), b.basis());
    LatticeBasis left_kernel = kernel_lattice(stacked.transposed());
    std::vector<std::vector<Int>> gens;
    gens.reserve(left_kernel.rank());
    for (std::size_t r = 0; r < left_kernel.rank(); ++r) {
        std::vector<Int> coeff = left_kernel.vector_at(r);
        std::vector<Int> v(n, Int(0));
        for (std::size_t i = 0; i < a.rank(); ++i) {
            if (coeff[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] += coeff[i] * a.basis()(i, j);
        }
        gens.push_back(std::move(v));
    }
    return LatticeBasis::from_generators(gens, n);
}

LatticeBasis map_lattice(const IntegerMatrix& m, const LatticeBasis& l) {
    if (m.cols() != l.ambient_rank())
        throw validation_error("map_lattice: dimension mismatch");
    // rows v of the basis map to (m v); as row data that is basis * m^T
    return LatticeBasis::from_generators(l.basis() * m.transposed());
}

std::vector<Int> reduce_mod_lattice(std::vector<Int> v, const LatticeBasis& l) {
    if (v.size() != l.ambient_rank())
        throw validation_error("reduce_mod_lattice: ambient rank mismatch");
    for (std::size_t i = 0; i < l.rank(); ++i) {
        const std::size_t p = l.pivot(i);
        Int q = floor_div(v[p], l.basis()(i, p));
        if (q != 0)
            for (std::size_t j = p; j < v.size(); ++j) v[j] -= q * l.basis()(i, j);
    }
    return v;
}

QuotientStructure quotient_structure(const LatticeBasis& super, const LatticeBasis& sub) {
    if (super.ambient_rank() != sub.ambient_rank())
        throw validation_error("quotient: ambient rank mismatch");
    const std::size_t k = super.rank();

    // express every generator of sub in super's coordinates
    IntegerMatrix x(sub.rank(), k);
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto coords = super.coordinates_of(sub.vector_at(i));
        if (!coords)
            throw validation_error("quotient: generator " + std::to_string(i) + " = " +
                                   vec_to_string(sub.vector_at(i)) +
                                   " of the subgroup is not contained in the supergroup");
        for (std::size_t j = 0; j < k; ++j) x(i, j) = (*coords)[j];
    }

    SmithNormalForm s = snf(x);
    // row(X) = row(S * V^{-1}); the rows f_i of V^{-1} are a basis of Z^k
    // and row(X) = <d_i f_i>, so f_i generates a summand of order d_i.
    IntegerMatrix v_inv = unimodular_inverse(s.right);

    QuotientStructure out;
    out.invariant_factors.assign(k, Int(0));
    for (std::size_t i = 0; i < std::min(s.invariant_factors.size(), k); ++i)
        out.invariant_factors[i] = s.invariant_factors[i];

    LatticeBasis rows_x = LatticeBasis::from_generators(x);
    out.generator_coords.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        out.generator_coords.push_back(reduce_mod_lattice(v_inv.row(i), rows_x));
    return out;
}

std::vector<Int> quotient_invariants(const LatticeBasis& super, const LatticeBasis& sub) {
    return quotient_structure(super, sub).invariant_factors;
}

std::vector<Int> nontrivial_factors(const std::vector<Int>& factors) {
    std::vector<Int> out;
    for (const Int& d : factors)
        if (d != 1) out.push_back(d);
    return out;
}

} // namespace pi0
