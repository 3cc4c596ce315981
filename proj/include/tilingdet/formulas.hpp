#pragma once

#include <span>
#include <vector>

#include "tilingdet/exactnum.hpp"
#include "tilingdet/lingebra.hpp"

namespace tilingdet::formulas {

/// T_{k,q,r}: tilings of a (k, q, k) semi-hexagon with up triangles removed
/// at positions r (0 <= r_0 < ... < r_{k-1} < q + k) of the long side.
Integer semihex_dented_count(long k, long q, std::span<const long> dents);

/// A_{a,b,r}: tilings of an a by b dented Aztec rectangle. Dents must be
/// nondecreasing in [0, a]; a repeated dent gives 0.
Integer aztec_dented_count(long a, long b, std::span<const long> dents);

/// Tilings of the (k, q, k) hexagon:
/// V_{2k+q-1} V_{q-1} V_{k-1}^2 / (V_{k+q-1}^2 V_{2k-1}).
Integer hexagon_count_kqk(long k, long q);

/// Tilings of the (k, q, k) hexagon whose vertical lozenges cross the
/// horizontal axis only at positions in L:
/// det(sum_{l in L} l^{i+j})_{0..k-1} / V_{k-1}^2.
Integer crossing_restricted_count(long k, long q, std::span<const long> L);

/// The (k, 2n+1-k, k, k+1, 2n-k, k+1) hexagon with the central triangle
/// below the axis removed, 1 <= k <= 2n.
lingebra::ExactMatrix central_triangle_matrix(long k, long n);
Integer central_triangle_removed_det(long k, long n);
Integer central_triangle_removed_closed(long k, long n);

/// odd: the (2m-1, 2n, 2m-1) hexagon; even: the (2m, 2n-1, 2m) hexagon.
enum class Parity { odd, even };

struct HexagonShape {
  long k = 0;
  long q = 0;
};
HexagonShape central_lozenge_shape(long m, long n, Parity parity);

/// Size of the symmetric-power determinant attached to the shape:
/// 2m-2 (odd) or 2m-1 (even).
long central_lozenge_order(long m, Parity parity);

/// Tilings containing the central vertical lozenge, det((1+(-1)^{i+j}) S_{m+n-1}^{i+j})_{1..K} / V_K^2.
Integer central_lozenge_det(long m, long n, Parity parity);
/// Same count through the superfactorial prefactor and hypergeometric partial sum.
Integer central_lozenge_closed(long m, long n, Parity parity);
/// All tilings, from the shifted determinant indexed from 0 with the
/// Kronecker term on the (0, 0) entry.
Integer central_lozenge_total_det(long m, long n, Parity parity);
/// Tilings avoiding the central vertical lozenge (index range from 0, no Kronecker term).
Integer central_lozenge_absent_det(long m, long n, Parity parity);

/// det((1+(-1)^{i+j}) S_p^{i+j})_{1..k} computed directly.
Rational prop_det_direct(long p, long k);
/// The same determinant via the closed prefactor and the partial sum over
/// j <= k/2. It vanishes when k > 2p (the matrix rank is at most 2p).
Rational prop_det_closed(long p, long k);

/// Summand of the partial sum with parameter N = m + n:
/// (1/2)_j^2 (5/4)_j (1-N)_j (N)_j / ((1)_j^2 (1/4)_j (1/2+N)_j (3/2-N)_j).
Rational hexagon_sum_term(long N, long j);

/// sum_{i=0}^{n-1} hexagon_sum_term(2n, i), which equals (4n-1)/3.
Rational wz_sum(long n);
/// hexagon_sum_term(2n, i) / (4n - 1).
Rational wz_Q(long n, long i);
/// Certificate companion of wz_Q.
Rational wz_U(long n, long i);
/// U(n, i+1) - U(n, i) - Q(n+1, i) + Q(n, i) for 0 <= i <= n-1.
Rational wz_certificate_residual(long n, long i);

/// Tilings of the a by b undented rectangle (a < b <= 2a+1) with b - a squares
/// removed from the central diagonal at positions `removed` (strictly
/// increasing in [0, a]).
Integer aztec_missing_squares_count(long a, long b, std::span<const long> removed);

/// The undented (2k-1) by 2k rectangle with square k-1 of the central
/// diagonal removed, in closed product form.
Integer problem10_closed(long k);

namespace detail {
/// prod_{i<j} (x_j - x_i).
Integer vandermonde(std::span<const long> xs);
/// 2^{k^2+k-1} / (V_{k-2} V_{k-1}) times the Vandermonde products of the
/// even- and odd-indexed elements of {0..2k-1} minus {k-1}.
Integer problem10_vandermonde_form(long k);
/// The even-indexed and odd-indexed Vandermonde products above, for k = 2q or 2q+1.
Integer problem10_even_product(long k);
Integer problem10_odd_product(long k);
}  // namespace detail

}  // namespace tilingdet::formulas
