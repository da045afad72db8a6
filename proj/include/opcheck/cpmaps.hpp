#ifndef OPCHECK_CPMAPS_HPP
#define OPCHECK_CPMAPS_HPP

#include <span>
#include <vector>

#include "opcheck/hermitian.hpp"

namespace opcheck {

/// Completely positive map in Kraus form, Phi(A) = sum_i C_i^H A C_i
/// with each C_i of shape dim_in x dim_out.  Under this convention
/// unital means sum_i C_i^H C_i = I_out and trace-preserving means
/// sum_i C_i C_i^H = I_in (both detected at construction, Frobenius
/// tolerance 1e-10).
struct CPMap {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<GeneralMatrix> kraus;
  bool unital = false;
  bool trace_preserving = false;
};

/// Validates shapes/finiteness and computes the flags.  Throws
/// EmptyInput for an empty factor list, ShapeError for inconsistent
/// factor shapes.
CPMap make_cpmap(std::vector<GeneralMatrix> kraus);

CPMap identity_channel(int dim);

HermitianMatrix apply(const CPMap& phi, const HermitianMatrix& A);
GeneralMatrix apply(const CPMap& phi, const GeneralMatrix& A);

/// Choi matrix J = sum_{ij} E_ij (x) Phi(E_ij), of dimension
/// dim_in * dim_out with row-major composite index i * dim_out + r.
struct ChoiMatrix {
  HermitianMatrix matrix;
  int dim_in = 0;
  int dim_out = 0;
};

ChoiMatrix choi(const CPMap& phi);

/// Kraus factors from an eigendecomposition of the Choi matrix
/// (eigenvalues below 1e-12 * trace dropped; a zero Choi matrix yields
/// one zero factor).  Throws NotCP when lambda_min < -1e-8 * ||J||_2.
CPMap kraus_from_choi(const ChoiMatrix& J);

/// Partial trace over the given tensor factor (1 or 2) of a d1 (x) d2
/// composite, as a CP (trace-preserving) map in Kraus form.
CPMap partial_trace_map(int d1, int d2, int factor);

/// Phi (x) id_d (Kraus factors C_i (x) I_d).
CPMap tensor_with_identity(const CPMap& phi, int d);

enum class Normalization { none, unital, trace_preserving };

/// Random CP map with `rank` Ginibre Kraus factors, optionally
/// normalized to be exactly unital or trace-preserving.  Throws
/// SingularNormalization when the normalizer sum is numerically
/// singular (e.g. rank * dim_out < dim_in for trace_preserving).
CPMap random_cp(int dim_in, int dim_out, int rank, Normalization norm, rng::Stream& rng);

}  // namespace opcheck

#endif  // OPCHECK_CPMAPS_HPP
