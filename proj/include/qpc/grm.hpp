#pragma once

#include <optional>

#include "qpc/geometry.hpp"
#include "qpc/linalg.hpp"

namespace qpc {

// A linear code given by a generator matrix in RREF form, with its full-rank
// parity-check matrix. generator * parity^T == 0 and
// rows(parity) == n - dim always hold.
struct LinearCode {
    FieldPtr field;
    std::size_t n = 0;
    FqMatrix generator;
    FqMatrix parity;
    std::size_t dim = 0;

    struct GrmTag {
        unsigned r = 0;
        unsigned m = 0;
    };
    std::optional<GrmTag> meta;  // present when GRM-constructed
};

// Dimension of RM_q(r,m) by the inclusion-exclusion formula
// sum_k (-1)^k C(m,k) C(m+r-kq, r-kq), exact, with terms vanishing when
// r - kq < 0.
std::uint64_t grm_dimension(unsigned q, unsigned m, unsigned r);

// Minimum distance (q-b) q^(m-a-1) where r = (q-1)a + b, 0 <= b < q-1.
std::uint64_t grm_min_distance(unsigned q, unsigned m, unsigned r);

// Order of the dual code, (q-1)m - 1 - r; requires r < (q-1)m.
unsigned dual_order(unsigned q, unsigned m, unsigned r);

// RM_q(r,m) by evaluating every reduced monomial of total degree <= r at the
// canonical point order. The rank of the evaluation rows must match
// grm_dimension; a mismatch is an internal-consistency failure.
LinearCode build_grm(const AffineSpace& space, unsigned r);

// RM_q((q-1)m-2, m), the covering-radius-2 code this project studies, with
// the explicit (m+1) x q^m parity check whose first row is all ones and
// whose remaining rows are the point coordinates. Requires q >= 3.
LinearCode build_target_code(const AffineSpace& space);

}  // namespace qpc
