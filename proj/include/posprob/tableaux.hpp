// Exhaustive counting of SSYTs, SSCTs, SCTs, and (0,1)-matrices. These counts
// are the transition coefficients; sums over contents are the per-row factors
// of the probability product. All counts are arbitrary precision because the
// row sums grow fast enough to overflow fixed width.
#pragma once

#include "posprob/combinatorics.hpp"
#include "posprob/numeric.hpp"

namespace posprob {

// Number of SSYTs of the given shape and content. Throws if the sizes
// differ; kostka(shape, shape) = 1 on the diagonal.
BigInt kostka(const Partition& shape, const Partition& content);

// Sum of kostka(shape, mu) over partitions mu of the same size:
// SSYTs of this shape with partition content.
BigInt kostka_row_sum(const Partition& shape);

// Sum of kostka(mu, content) over partitions mu:
// SSYTs of any shape with this content.
BigInt kostka_col_sum(const Partition& content);

// Number of (0,1)-matrices with the given row and column sum sequences.
// Matrices with different column counts are distinct; no zero padding.
BigInt zero_one_count(const Partition& rows, const Partition& cols);

// Sum of zero_one_count(rows, mu) over partitions mu of the same size.
BigInt zero_one_row_sum(const Partition& rows);

// Number of SSCTs of the given composition shape and composition content.
BigInt ssct_count(const Composition& shape, const Composition& content);

// Sum of ssct_count over all 2^{n-1} composition contents.
BigInt ssct_row_sum(const Composition& shape);

// Number of SCTs of the shape whose descent composition equals `descent`.
BigInt sct_count(const Composition& shape, const Composition& descent);

// Total number of SCTs of the shape.
BigInt sct_total(const Composition& shape);

// True iff the shape carries exactly one SCT; the closed pattern is
// (m, 1^{e_1}, 2, 1^{e_2}, ..., 2, 1^{e_k}) with m >= 0 boxes first,
// e_i >= 1 between consecutive 2s and e_k >= 0 at the end.
bool is_single_sct_shape(const Composition& alpha);

}  // namespace posprob
