#ifndef STDIV_PQ_ENGINE_HPP
#define STDIV_PQ_ENGINE_HPP

#include <optional>
#include <vector>

#include "stdiv/bipoly.hpp"
#include "stdiv/exact_element.hpp"
#include "stdiv/poly.hpp"

namespace stdiv {

// The normalized P/Q data of one weight-and-case pair (r', k):
//   P[i] = Ptilde_{k,i}(T,x) = d_k(x) * P_{k,i}(T,x), likewise Q[i].
// For k <= m the normalizer d_k is 1 and the entries are the plain P/Q; for
// k = r' the normalizer is x^{r'}, which clears the x^{-r'} pole of the
// closed form.
struct PQTable {
    long r = 0;  // the weight r', 1 <= r' < p-1
    long k = 0;  // case index, 0 <= k <= r'
    long m = 0;  // floor(r'/2)
    std::vector<BiPoly> P;
    std::vector<BiPoly> Q;
    Poly<Rat> d;          // d_k(x)
    Rat det_B_k0;         // det(B_{k,0}); det of the empty block is 1
    bool singular_at_x0;  // det(B_{k,0}) == 0 (e.g. k = r')

    // specialization P_{k,i}(T, x0) = Ptilde_{k,i}(T, x0)/d_k(x0); throws on
    // a singular block (d_k(x0) == 0)
    Poly<Rat> P_at(long i, const Rat& x0) const;
    Poly<Rat> Q_at(long i, const Rat& x0) const;
};

// M_{r',x}: upper triangular, x on the diagonal, and the coefficients of
// f_{r'} on the superdiagonals; entries are polynomials in x.
std::vector<std::vector<Poly<Rat>>> build_matrix(long r);

// Same matrix with x specialized to a rational.
std::vector<std::vector<Rat>> build_matrix_at(long r, const Rat& x);

// Fraction-free determinant of a polynomial matrix (Bareiss).
Poly<Rat> poly_det(std::vector<std::vector<Poly<Rat>>> a);

// The table for Case (k) at weight r'; memoized, safe for concurrent readers.
const PQTable& pq_table(long r, long k);

// a_k = a_k(0), the T^{k-1} coefficient of P_{k,0}(T,0). Defined for
// 1 <= k <= m+1 except (r',k) = (1,1).
Rat a_value(long r, long k);

// P_{k,0}(-1,0) for 1 <= k <= m, and the even-weight companion
// P_{m,m}(-1,0) = -m(H_m + H_{m-1}) for r' = 2m.
Rat p_at_minus1(long r, long k);
Rat p_mm_at_minus1(long r);

// delta_l(-1) in the constant branches (0 <= l <= (r'+1)/2, l != 0).
Rat delta_at_minus1(long r, long l);
// Full piecewise value, valid in every branch; x is consulted only when
// l = 0 or (l = m+1 with r' = 2m).
ExactElement delta_at_minus1(long r, long l, const ExactElement& x);
// True when delta_l(-1,x) actually depends on x.
bool delta_needs_x(long r, long l);

// d/dT delta_l at T = -1, for 1 <= l < r'/2 + 1.
Rat delta_dot_at_minus1(long r, long l);
// Residue-level value used in the mod-p matrices; extends the formula to
// l = 0 (zero) and to the x-dependent branch l = m+1, r' = 2m.
Rat delta_dot_residue(long r, long l);

// b_{r',k}(-1): nonzero only at (2m+1, m+2) and at (3,3).
Rat b_value(long r, long k);

}  // namespace stdiv

#endif
