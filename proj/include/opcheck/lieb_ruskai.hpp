#ifndef OPCHECK_LIEB_RUSKAI_HPP
#define OPCHECK_LIEB_RUSKAI_HPP

#include <span>

#include "opcheck/means.hpp"

namespace opcheck {

/// K^H A^{-1} K for PD A and arbitrary square K of the same dimension.
HermitianMatrix lr_basic(const HermitianMatrix& A, const GeneralMatrix& K);

/// C G^{-1} C where G is the chosen geometric mean of A_1, ..., A_n and
/// C is PD (Hermitian).
HermitianMatrix lr_n(const MeanSpec& mean, std::span<const HermitianMatrix> A,
                     const HermitianMatrix& C);

/// C^H B^{-1/2} (B^{1/2} A^{-1} B^{1/2})^alpha B^{-1/2} C for alpha in
/// [0, 1]; equals C^H A^{-alpha} B^{-(1-alpha)} C when A and B commute.
HermitianMatrix lr_weighted(double alpha, const HermitianMatrix& A, const HermitianMatrix& B,
                            const GeneralMatrix& C);

/// The 2x2 operator block [[A, K^H], [K, A]] on the doubled space.
HermitianMatrix block_embed(const HermitianMatrix& A, const GeneralMatrix& K);

}  // namespace opcheck

#endif  // OPCHECK_LIEB_RUSKAI_HPP
