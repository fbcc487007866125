#ifndef RECALC_CHAR_SUBALGEBRA_HPP
#define RECALC_CHAR_SUBALGEBRA_HPP

#include "recalc/hecke_algebra.hpp"
#include "recalc/quantum_double.hpp"

namespace recalc {

// Carrier of a characteristic-map image: which generating matrix fills the
// trace chain.
enum class Carrier { M, D, LHat, KHat };

struct CharElement {
    Carrier carrier;
    int n = 0;
    NcPoly value;
};

// --- builders -----------------------------------------------------------------

// Quantum trace of rho(z) against the length-n chain of the carrier copies:
// carrier M gives characteristic-subalgebra elements, D the generalized
// Laplacians, LHat the generalized Casimirs, KHat the descending-underline
// Casimir form.
CharElement ch(const QuantumDouble& qd, const HeckeElement& z, int n, Carrier carrier);

// Image of the Coxeter element: the quantum power sum of order k.
CharElement power_sum(const QuantumDouble& qd, int k, Carrier carrier);

// Product of power sums over the parts of a partition.
NcPoly power_sum_partition(const QuantumDouble& qd, const Partition& lambda,
                           Carrier carrier = Carrier::M);

// Quantum Schur polynomial through the primitive idempotent of (lambda, T).
CharElement schur(const QuantumDouble& qd, const Partition& lambda, const StdTableau& T);

// Tr_R X^k computed through one-site matrix powers (the reduced form of the
// power sum, used as its cross-check).
NcPoly trace_power(const QuantumDouble& qd, Carrier carrier, int k);

// Generalized Laplacian / Casimir named wrappers.
inline CharElement laplacian(const QuantumDouble& qd, const HeckeElement& zQ, int m) {
    return ch(qd, zQ, m, Carrier::D);
}
inline CharElement casimir(const QuantumDouble& qd, const HeckeElement& zQ, int k) {
    return ch(qd, zQ, k, Carrier::LHat);
}
inline CharElement casimir_k_form(const QuantumDouble& qd, const HeckeElement& zQ, int n) {
    return ch(qd, zQ, n, Carrier::KHat);
}

// The shifted-inverse-product matrix on `sites` sites:
// P_1 = I, P_k = (I - Jinv_k)/(q - q^-1); built both ways (exact division of
// the Jucys-Murphy form, and the R^-1 chain polynomial), which must agree.
struct PMatrix {
    int k = 0;
    TensorOp value;
};
PMatrix p_matrix(const QuantumDouble& qd, int k);
TensorOp p_matrix_op(const QuantumDouble& qd, int k, int sites);

// Normally ordered generalized Casimir.
NcPoly ordered_casimir(const QuantumDouble& qd, const HeckeElement& zQ, int k);

// --- verifiers ------------------------------------------------------------------

bool verify_ch_placements(const QuantumDouble& qd, const HeckeElement& z, int n,
                          Witness* w = nullptr);
bool verify_power_sum_reduction(const QuantumDouble& qd, int k, Carrier carrier,
                                Witness* w = nullptr);
bool verify_schur_tableau_independence(const QuantumDouble& qd, const Partition& lambda,
                                       Witness* w = nullptr);
// s_1 s_1 = s_2 + s_11 and s_1 s_2 = s_3 + s_21, both with coefficient 1.
bool verify_littlewood_richardson(const QuantumDouble& qd, Witness* w = nullptr);

// Action of the (zQ, m) Laplacian on ch_k(zch): vanishes for k < m, else
// lands in the characteristic span with degree k - m.
bool verify_laplace_stability(const QuantumDouble& qd, const HeckeElement& zQ, int m,
                              const HeckeElement& zch, int k, Witness* w = nullptr);

// Quadratic-linear relation of the Euler matrix.
bool verify_mre(const QuantumDouble& qd, Witness* w = nullptr);
// Exchange relation between the Euler matrix and the coordinates.
bool verify_l_perm(const QuantumDouble& qd, Witness* w = nullptr);
// The shifted generator matrix satisfies the homogeneous quadratic relation.
bool verify_khat_re(const QuantumDouble& qd, Witness* w = nullptr);
// Khat_{n+1,underline} acting on the coordinate chain multiplies by Jinv_{n+1}.
bool verify_k_action(const QuantumDouble& qd, int n, Witness* w = nullptr);
// Descending underline Khat chain action: the general product rule.
bool verify_k_gen_action(const QuantumDouble& qd, int n, int p, Witness* w = nullptr);
// Khat_{n->1} underline equals Khat_{1->n} overline.
bool verify_underline_overline(const QuantumDouble& qd, int n, Witness* w = nullptr);
// Casimir action preserves degree and characteristic membership.
bool verify_casimir_stability(const QuantumDouble& qd, const HeckeElement& zQ, int k,
                              const HeckeElement& zch, int n, Witness* w = nullptr);

// Normal-ordering layer.
bool verify_def51(const QuantumDouble& qd, Witness* w = nullptr);
bool verify_lemma8(const QuantumDouble& qd, int m, int n, Witness* w = nullptr);
bool verify_theorem7(const QuantumDouble& qd, int k, Witness* w = nullptr);

// Wick layer: the commutation identity and the expansion formula.
bool verify_wick_commutation(const QuantumDouble& qd, int k, Witness* w = nullptr);
bool verify_wick(const QuantumDouble& qd, int k, Witness* w = nullptr);

// Factorized operator identity.
bool verify_capelli(const QuantumDouble& qd, int k, Witness* w = nullptr);

// Classical limit of the P matrices against transposition sums (expects an
// exact-mode double built on a flip deformation).
bool verify_classical_p_limit(const QuantumDouble& qd, int k, Witness* w = nullptr);

// Idempotent projection collapses the Jucys-Murphy product to the content
// scalar.
bool verify_projected_capelli(const QuantumDouble& qd, const Partition& lambda,
                              const StdTableau& T, Witness* w = nullptr);

// Centrality of the ordered Casimir plus its expansion over lower Casimirs;
// mixing_out receives the coefficient of the order-(k-1) tail when solving
// the k = 2 Coxeter case.
bool verify_theorem22(const QuantumDouble& qd, const HeckeElement& zQ, int k,
                      std::vector<Scalar>* coeffs_out = nullptr, Witness* w = nullptr);

} // namespace recalc

#endif
