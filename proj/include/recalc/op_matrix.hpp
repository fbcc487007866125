#ifndef RECALC_OP_MATRIX_HPP
#define RECALC_OP_MATRIX_HPP

#include "recalc/hecke_symmetry.hpp"
#include "recalc/nc_poly.hpp"

namespace recalc {

// Matrix with noncommutative-polynomial entries on k sites.
using OpMatrix = SparseMat<NcPoly>;

OpMatrix promote(const TensorOp& X);

// Generating matrix on one site: entry (i, j) is the single generator.
OpMatrix gen_matrix(GenKind kind, int N, const QMode& mode);

// (M D) as a one-site matrix: entries sum_k m_i^k d_k^j.
OpMatrix l_hat(int N, const QMode& mode);

// I - (q - q^-1) (M D).
OpMatrix k_hat(int N, const QMode& mode);

// Matrix copies on k sites: overline X_{r+1} = R_r X_r R_r^-1, underline
// X_{r+1} = R_r^-1 X_r R_r; X is a one-site matrix.
OpMatrix copy_overline(const OpMatrix& X, int r, int k, const TensorOp& R);
OpMatrix copy_underline(const OpMatrix& X, int r, int k, const TensorOp& R);

// Ascending product X_1 X_2bar ... X_lenbar of overline copies of a
// one-site matrix, all on k sites.
OpMatrix overline_chain(const OpMatrix& X, int len, int k, const TensorOp& R);

// Chains of copies (all on k sites):
OpMatrix m_chain(int len, int k, const TensorOp& R);        // M_1 M_2bar ... M_lenbar
OpMatrix d_chain_asc(int len, int k, const TensorOp& R);    // D_1 ... D_lenbar
OpMatrix d_chain_desc(int len, int k, const TensorOp& R);   // D_lenbar ... D_1
OpMatrix l_chain(int len, int k, const TensorOp& R);        // Lhat_1 ... Lhat_lenbar
OpMatrix k_chain_desc(int from, int to, int k, const TensorOp& R);  // Khat_from ... Khat_to (underline)

// Quantum trace over selected sites with weight matrix C.
OpMatrix r_trace_entries(const OpMatrix& X, const TensorOp& C, const std::vector<int>& sites);
// All sites traced: the single remaining entry.
NcPoly r_trace_all(const OpMatrix& X, const TensorOp& C);

enum class RelKind { RE_M, RE_D, PERM };

// Defining relation sets, each entry understood as == 0:
//   RE_M:  R M_1 R M_1 - M_1 R M_1 R
//   RE_D:  R^-1 D_1 R^-1 D_1 - D_1 R^-1 D_1 R^-1
//   PERM:  D_1 R M_1 R - R M_1 R^-1 D_1 - R
struct RelationSet {
    RelKind kind;
    bool homogeneous;
    std::vector<NcPoly> entries;
};

RelationSet relations(RelKind kind, const TensorOp& R);

} // namespace recalc

#endif
