#ifndef RECALC_HECKE_SYMMETRY_HPP
#define RECALC_HECKE_SYMMETRY_HPP

#include "recalc/sparse_mat.hpp"

namespace recalc {

using TensorOp = SparseMat<Scalar>;

// Skew-inverse data of a Hecke symmetry: Psi solving
// Tr_2 R_12 Psi_23 = Tr_2 Psi_12 R_23 = P_13, together with its two partial
// contractions C_i^j = sum_k Psi_ik^jk and B_i^j = sum_k Psi_ki^kj.
struct SkewData {
    TensorOp psi;   // 2 sites
    TensorOp c;     // 1 site
    TensorOp b;     // 1 site
};

// --- constructors -----------------------------------------------------------

// The usual flip P(x_i (x) x_j) = x_j (x) x_i.
TensorOp flip(int N, const QMode& mode);

// Z2-graded flip on C^(m|n): sign (-1)^{|i||j|}, first m basis vectors even.
TensorOp super_flip(int m, int n, const QMode& mode);

// Standard GL(N)-type Hecke symmetry:
//   R(x_i (x) x_j) = q^{d_ij} x_j (x) x_i + (q - q^-1) [i < j] x_i (x) x_j.
TensorOp dj_r_matrix(int N, const QMode& mode);

// GL(m|n)-type deformation of the super flip.
TensorOp dj_super_r_matrix(int m, int n, const QMode& mode);

// --- certification checks ---------------------------------------------------

// R_1 R_2 R_1 - R_2 R_1 R_2 on three sites; zero iff R is a braiding.
TensorOp check_braid(const TensorOp& R);

// (q I - R)(q^-1 I + R); zero iff R^2 = I + (q - q^-1) R.
TensorOp check_hecke(const TensorOp& R);

// --- exact linear algebra ---------------------------------------------------

using DenseMat = std::vector<std::vector<Scalar>>;

// Gauss-Jordan inverse over the exact scalar field; throws singular_error.
DenseMat dense_inverse(DenseMat a, const QMode& mode);

TensorOp tensor_inverse(const TensorOp& X);   // throws singular_error
int tensor_rank(const TensorOp& X);

// Solves for Psi and contracts C and B.  Throws singular_error when the
// defining linear system (N^4 unknowns, factored through an N^2 x N^2
// partial transpose) is singular.
SkewData skew_inverse(const TensorOp& R);

// --- traces and chains ------------------------------------------------------

// Quantum trace over the given sites: multiplies by C at each traced site,
// then contracts.  C = I recovers the ordinary partial trace.
TensorOp r_trace(const TensorOp& X, const TensorOp& C, const std::vector<int>& sites);

// Ordinary trace of a 1-site operator (or any operator, over all sites).
Scalar trace(const TensorOp& X);

// Entry of a 0-site (1x1) operator.
Scalar scalar_of(const TensorOp& X);

// Chain R_from R_{from±1} ... R_to on k sites (descending when to < from);
// with inv, every factor is R^-1_i.
TensorOp r_chain(const TensorOp& R, int from, int to, int k, bool inv = false);

// Jucys-Murphy images: J_1 = I, J_r = R_{r-1} J_{r-1} R_{r-1}; shifted
// family J_s^(up n) = R_{n+s-1 -> n+1} R_{n+1 -> n+s-1}; plus inverses.
TensorOp jm_image(int r, int k, const TensorOp& R);
TensorOp jm_image_inv(int r, int k, const TensorOp& R);
TensorOp jm_image_shifted(int s, int n, int k, const TensorOp& R);
TensorOp jm_image_shifted_inv(int s, int n, int k, const TensorOp& R);

// Entrywise evaluation of an exact-mode operator at q = q0.
TensorOp specialize(const TensorOp& X, const Rational& q0);

// Transposition of sites a and b as an operator on k sites.
TensorOp site_transposition(int a, int b, int k, int N, const QMode& mode);

} // namespace recalc

#endif
