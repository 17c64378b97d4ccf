#include "pi0/normal_form.hpp"

#include <algorithm>
#include <cstddef>

namespace pi0 {

namespace {

// Replace rows (r, i) by the unimodular combination that leaves
// gcd(a(r,c), a(i,c)) at (r,c) and 0 at (i,c). det of the 2x2 block is +1.
void gcd_row_step(IntegerMatrix& a, IntegerMatrix& u, std::size_t r, std::size_t i,
                  std::size_t c) {
    Int g, s, t;
    extended_gcd(a(r, c), a(i, c), g, s, t);
    const Int p = a(r, c) / g; // exact
    const Int q = a(i, c) / g;
    auto combine = [&](IntegerMatrix& m) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int mr = m(r, j);
            Int mi = m(i, j);
            m(r, j) = s * mr + t * mi;
            m(i, j) = p * mi - q * mr;
        }
    };
    combine(a);
    combine(u);
}

void gcd_col_step(IntegerMatrix& a, IntegerMatrix& v, std::size_t c, std::size_t j,
                  std::size_t r) {
    Int g, s, t;
    extended_gcd(a(r, c), a(r, j), g, s, t);
    const Int p = a(r, c) / g;
    const Int q = a(r, j) / g;
    auto combine = [&](IntegerMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Int mc = m(i, c);
            Int mj = m(i, j);
            m(i, c) = s * mc + t * mj;
            m(i, j) = p * mj - q * mc;
        }
    };
    combine(a);
    combine(v);
}

} // namespace

HermiteNormalForm hnf(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    IntegerMatrix u = IntegerMatrix::identity(m.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        // pick a pivot in column c at or below row r
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        a.swap_rows(r, piv);
        u.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < a.rows(); ++i)
            if (a(i, c) != 0) gcd_row_step(a, u, r, i, c);
        if (sign(a(r, c)) < 0) {
            a.negate_row(r);
            u.negate_row(r);
        }
        // reduce the entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(a(i, c), a(r, c));
            if (q != 0) {
                a.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
        }
        ++r;
    }
    return {std::move(a), std::move(u)};
}

SmithNormalForm snf(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    IntegerMatrix u = IntegerMatrix::identity(m.rows());
    IntegerMatrix v = IntegerMatrix::identity(m.cols());
    const std::size_t mn = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < mn; ++t) {
        // find any nonzero entry in the trailing block; prefer small pivots
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j)
                if (a(i, j) != 0) {
                    Int mag = abs(a(i, j));
                    if (!found || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
        if (!found) break; // trailing block is zero: remaining factors stay 0

        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            for (std::size_t i = t + 1; i < a.rows(); ++i)
                if (a(i, t) != 0) gcd_row_step(a, u, t, i, t);
            for (std::size_t j = t + 1; j < a.cols(); ++j)
                if (a(t, j) != 0) gcd_col_step(a, v, t, j, t);

            bool dirty = false;
            for (std::size_t i = t + 1; i < a.rows() && !dirty; ++i)
                if (a(i, t) != 0) dirty = true;
            if (dirty) continue;

            // enforce the divisibility chain: a(t,t) must divide the rest
            bool fixed = true;
            for (std::size_t i = t + 1; i < a.rows() && fixed; ++i)
                for (std::size_t j = t + 1; j < a.cols() && fixed; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
    }

    std::vector<Int> factors(mn);
    for (std::size_t i = 0; i < mn; ++i) {
        if (sign(a(i, i)) < 0) {
            a.negate_row(i);
            u.negate_row(i);
        }
        factors[i] = a(i, i);
    }
    return {std::move(factors), std::move(u), std::move(v)};
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& u) {
    if (!u.is_square()) throw consistency_error("unimodular_inverse: matrix not square");
    // For unimodular u the HNF is the identity and the transform is u^{-1}.
    HermiteNormalForm h = hnf(u);
    if (!h.h.is_identity())
        throw consistency_error("unimodular_inverse: matrix is not unimodular");
    return std::move(h.transform);
}

} // namespace pi0
