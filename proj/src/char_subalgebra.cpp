#include "recalc/char_subalgebra.hpp"

namespace recalc {

namespace {

OpMatrix carrier_chain(const QuantumDouble& qd, Carrier carrier, int n, int sites) {
    const TensorOp& R = qd.R();
    switch (carrier) {
        case Carrier::M: return m_chain(n, sites, R);
        case Carrier::D: return d_chain_asc(n, sites, R);
        case Carrier::LHat: return l_chain(n, sites, R);
        case Carrier::KHat: return k_chain_desc(n, 1, sites, R);
    }
    throw error("unknown carrier");
}

OpMatrix carrier_one_site(const QuantumDouble& qd, Carrier carrier) {
    switch (carrier) {
        case Carrier::M: return gen_matrix(GenKind::M, qd.N(), qd.mode());
        case Carrier::D: return gen_matrix(GenKind::Del, qd.N(), qd.mode());
        case Carrier::LHat: return l_hat(qd.N(), qd.mode());
        case Carrier::KHat: return k_hat(qd.N(), qd.mode());
    }
    throw error("unknown carrier");
}

} // namespace

CharElement ch(const QuantumDouble& qd, const HeckeElement& z, int n, Carrier carrier) {
    if (z.degree() != n) throw shape_error("element degree must match the chain length");
    TensorOp img = rho_r(z, qd.R(), n);
    NcPoly value = r_trace_all(promote(img) * carrier_chain(qd, carrier, n, n), qd.C());
    return CharElement{carrier, n, std::move(value)};
}

CharElement power_sum(const QuantumDouble& qd, int k, Carrier carrier) {
    return ch(qd, coxeter_element(k, qd.mode()), k, carrier);
}

NcPoly power_sum_partition(const QuantumDouble& qd, const Partition& lambda, Carrier carrier) {
    NcPoly out = NcPoly::one(qd.mode());
    for (int part : lambda.parts) out = out * power_sum(qd, part, carrier).value;
    return out;
}

CharElement schur(const QuantumDouble& qd, const Partition& lambda, const StdTableau& T) {
    qd.mode().require_generic();
    HeckeElement e = primitive_idempotent(lambda, T, qd.mode());
    CharElement out = ch(qd, e, lambda.weight(), Carrier::M);
    return out;
}

NcPoly trace_power(const QuantumDouble& qd, Carrier carrier, int k) {
    OpMatrix x = carrier_one_site(qd, carrier);
    OpMatrix pw = x;
    for (int t = 1; t < k; ++t) pw = pw * x;
    return r_trace_all(pw, qd.C());
}

TensorOp p_matrix_op(const QuantumDouble& qd, int k, int sites) {
    const TensorOp& R = qd.R();
    if (k < 1 || k > sites) throw shape_error("index out of range for the P matrix");
    if (k == 1) return TensorOp::identity(R.dim(), sites, R.mode());
    qd.mode().require_generic();

    // Jucys-Murphy form with exact division by q - q^-1
    Scalar gap = Scalar::q(qd.mode()) - Scalar::q_power(-1, qd.mode());
    TensorOp diff = TensorOp::identity(R.dim(), sites, R.mode()) - jm_image_inv(k, sites, R);
    TensorOp jm_form(R.dim(), sites, R.mode());
    for (auto& [key, v] : diff.entries()) {
        Scalar s = v / gap;
        if (qd.mode().is_exact() && !s.rf().is_polynomial())
            throw division_error("P matrix entries fail exact division; "
                                 "the input operator is not a Hecke symmetry");
        jm_form.set(key.first, key.second, s);
    }

    // polynomial chain form
    TensorOp poly_form = r_chain(R, k - 1, k - 1, sites, true);
    for (int s = 1; s <= k - 2; ++s) {
        TensorOp term = r_chain(R, k - 1, s + 1, sites, true) *
                        r_chain(R, s, s, sites, true) *
                        r_chain(R, s + 1, k - 1, sites, true);
        poly_form = poly_form + term;
    }
    if (!(jm_form == poly_form))
        throw error("the two P matrix constructions disagree");
    return jm_form;
}

PMatrix p_matrix(const QuantumDouble& qd, int k) {
    return PMatrix{k, p_matrix_op(qd, k, k)};
}

NcPoly ordered_casimir(const QuantumDouble& qd, const HeckeElement& zQ, int k) {
    if (zQ.degree() != k) throw shape_error("element degree must match the chain length");
    TensorOp img = rho_r(zQ, qd.R(), k);
    return r_trace_all(promote(img) * qd.ordered_l_chain(k, k), qd.C());
}

// --- verifiers ---------------------------------------------------------------------

bool verify_ch_placements(const QuantumDouble& qd, const HeckeElement& z, int n, Witness* w) {
    TensorOp img = rho_r(z, qd.R(), n);
    OpMatrix chain = m_chain(n, n, qd.R());
    NcPoly left = r_trace_all(promote(img) * chain, qd.C());
    NcPoly right = r_trace_all(chain * promote(img), qd.C());
    return qd.alg_equal(left, right, w);
}

bool verify_power_sum_reduction(const QuantumDouble& qd, int k, Carrier carrier, Witness* w) {
    return qd.alg_equal(power_sum(qd, k, carrier).value, trace_power(qd, carrier, k), w);
}

bool verify_schur_tableau_independence(const QuantumDouble& qd, const Partition& lambda,
                                       Witness* w) {
    auto tabs = standard_tableaux(lambda);
    if (tabs.empty()) throw shape_error("partition has no standard tableaux");
    NcPoly first = schur(qd, lambda, tabs[0]).value;
    for (size_t t = 1; t < tabs.size(); ++t)
        if (!qd.alg_equal(first, schur(qd, lambda, tabs[t]).value, w)) return false;
    return true;
}

bool verify_littlewood_richardson(const QuantumDouble& qd, Witness* w) {
    auto s = [&](std::initializer_list<int> parts) {
        Partition lam{std::vector<int>(parts)};
        return schur(qd, lam, standard_tableaux(lam)[0]).value;
    };
    NcPoly s1 = s({1});
    if (!qd.alg_equal(s1 * s1, s({2}) + s({1, 1}), w)) return false;
    return qd.alg_equal(s1 * s({2}), s({3}) + s({2, 1}), w);
}

bool verify_laplace_stability(const QuantumDouble& qd, const HeckeElement& zQ, int m,
                              const HeckeElement& zch, int k, Witness* w) {
    NcPoly lap = laplacian(qd, zQ, m).value;
    NcPoly target = ch(qd, zch, k, Carrier::M).value;
    NcPoly res = qd.act(lap, target);
    if (k < m) {
        if (res.is_zero()) return true;
        if (w) w->what = "expected vanishing action, got " + res.str();
        return false;
    }
    // degree drops by exactly m
    for (auto& [word, c] : res.terms()) {
        if (int(word.size()) != k - m) {
            if (w) w->what = "unexpected degree " + std::to_string(word.size()) +
                             " term " + word_str(word);
            return false;
        }
    }
    return qd.char_membership(res, w);
}

bool verify_mre(const QuantumDouble& qd, Witness* w) {
    OpMatrix Rp = promote(qd.R());
    OpMatrix L1 = l_hat(qd.N(), qd.mode()).embed_at(1, 2);
    return qd.matrix_equal(Rp * L1 * Rp * L1 - L1 * Rp * L1 * Rp, Rp * L1 - L1 * Rp, w);
}

bool verify_l_perm(const QuantumDouble& qd, Witness* w) {
    OpMatrix Rp = promote(qd.R());
    OpMatrix Ri = promote(qd.Rinv());
    OpMatrix L1 = l_hat(qd.N(), qd.mode()).embed_at(1, 2);
    OpMatrix M1 = gen_matrix(GenKind::M, qd.N(), qd.mode()).embed_at(1, 2);
    return qd.matrix_equal(Rp * L1 * Rp * M1, M1 * Rp * L1 * Ri + Rp * M1, w);
}

bool verify_khat_re(const QuantumDouble& qd, Witness* w) {
    OpMatrix Rp = promote(qd.R());
    OpMatrix K1 = k_hat(qd.N(), qd.mode()).embed_at(1, 2);
    return qd.matrix_equal(Rp * K1 * Rp * K1, K1 * Rp * K1 * Rp, w);
}

bool verify_k_action(const QuantumDouble& qd, int n, Witness* w) {
    int sites = n + 1;
    const TensorOp& R = qd.R();
    OpMatrix K = copy_underline(k_hat(qd.N(), qd.mode()), n + 1, sites, R);
    OpMatrix chain = m_chain(n, sites, R);
    OpMatrix lhs = qd.act_matrix(K, chain);
    OpMatrix rhs = promote(jm_image_inv(n + 1, sites, R)) * chain;
    return qd.matrix_equal(lhs, rhs, w);
}

bool verify_k_gen_action(const QuantumDouble& qd, int n, int p, Witness* w) {
    int sites = n + p;
    const TensorOp& R = qd.R();
    OpMatrix K = k_chain_desc(n + p, n + 1, sites, R);
    OpMatrix chain = m_chain(n, sites, R);
    OpMatrix lhs = qd.act_matrix(K, chain);
    TensorOp pref = TensorOp::identity(qd.N(), sites, qd.mode());
    for (int i = 1; i <= p; ++i) pref = pref * jm_image_inv(n + i, sites, R);
    for (int s = 2; s <= p; ++s) pref = pref * jm_image_shifted(s, n, sites, R);
    OpMatrix rhs = promote(pref) * chain;
    return qd.matrix_equal(lhs, rhs, w);
}

bool verify_underline_overline(const QuantumDouble& qd, int n, Witness* w) {
    const TensorOp& R = qd.R();
    OpMatrix under = k_chain_desc(n, 1, n, R);
    OpMatrix over = overline_chain(k_hat(qd.N(), qd.mode()), n, n, R);
    return qd.matrix_equal(under, over, w);
}

bool verify_casimir_stability(const QuantumDouble& qd, const HeckeElement& zQ, int k,
                              const HeckeElement& zch, int n, Witness* w) {
    NcPoly cas = casimir(qd, zQ, k).value;
    NcPoly target = ch(qd, zch, n, Carrier::M).value;
    NcPoly res = qd.act(cas, target);
    for (auto& [word, c] : res.terms()) {
        if (int(word.size()) != n) {
            if (w) w->what = "degree not preserved: term " + word_str(word);
            return false;
        }
    }
    return qd.char_membership(res, w);
}

bool verify_def51(const QuantumDouble& qd, Witness* w) {
    const TensorOp& R = qd.R();
    OpMatrix D1 = gen_matrix(GenKind::Del, qd.N(), qd.mode()).embed_at(1, 2);
    OpMatrix M2bar = copy_overline(gen_matrix(GenKind::M, qd.N(), qd.mode()), 2, 2, R);
    OpMatrix lhs = qd.order_matrix_homogeneous(D1 * M2bar);
    OpMatrix rhs = M2bar * D1 * promote(qd.Rinv() * qd.Rinv());
    return qd.matrix_equal(lhs, rhs, w);
}

bool verify_lemma8(const QuantumDouble& qd, int m, int n, Witness* w) {
    if (!(1 <= m && m <= n - 1)) throw shape_error("lemma expects 1 <= m <= n-1");
    const TensorOp& R = qd.R();
    OpMatrix Dm = copy_overline(gen_matrix(GenKind::Del, qd.N(), qd.mode()), m, n, R);
    OpMatrix Ln = copy_overline(l_hat(qd.N(), qd.mode()), n, n, R);
    OpMatrix lhs = qd.order_matrix_homogeneous(Dm * Ln);
    TensorOp tail = jm_image_shifted(n - m, m, n, R) * jm_image_shifted_inv(n - m + 1, m - 1, n, R);
    OpMatrix rhs = Ln * Dm * promote(tail);
    return qd.matrix_equal(lhs, rhs, w);
}

namespace {

TensorOp jm_inverse_product(const QuantumDouble& qd, int k, int sites) {
    TensorOp acc = TensorOp::identity(qd.N(), sites, qd.mode());
    for (int s = 2; s <= k; ++s) acc = acc * jm_image_inv(s, sites, qd.R());
    return acc;
}

} // namespace

bool verify_theorem7(const QuantumDouble& qd, int k, Witness* w) {
    const TensorOp& R = qd.R();
    OpMatrix ordered = qd.order_matrix_homogeneous(l_chain(k, k, R));
    OpMatrix md = m_chain(k, k, R) * d_chain_desc(k, k, R);
    TensorOp jprod = jm_inverse_product(qd, k, k);
    if (!qd.matrix_equal(ordered, md * promote(jprod), w)) return false;
    return qd.matrix_equal(ordered, promote(jprod) * md, w);
}

bool verify_wick_commutation(const QuantumDouble& qd, int k, Witness* w) {
    int sites = k + 1;
    const TensorOp& R = qd.R();
    OpMatrix D = d_chain_desc(k, sites, R);
    OpMatrix L = copy_overline(l_hat(qd.N(), qd.mode()), k + 1, sites, R);
    OpMatrix lhs = D * L;
    TensorOp jinv = jm_image_inv(k + 1, sites, R);
    OpMatrix rhs = L * D * promote(jinv) + D * promote(p_matrix_op(qd, k + 1, sites));
    return qd.matrix_equal(lhs, rhs, w);
}

bool verify_wick(const QuantumDouble& qd, int k, Witness* w) {
    int sites = k + 1;
    const TensorOp& R = qd.R();
    OpMatrix L = copy_overline(l_hat(qd.N(), qd.mode()), k + 1, sites, R);
    const OpMatrix& oc_k = qd.ordered_l_chain(k, sites);
    OpMatrix lhs = oc_k * L;
    OpMatrix rhs = qd.ordered_l_chain(k + 1, sites) +
                   oc_k * promote(p_matrix_op(qd, k + 1, sites));
    return qd.matrix_equal(lhs, rhs, w);
}

bool verify_capelli(const QuantumDouble& qd, int k, Witness* w) {
    const TensorOp& R = qd.R();
    OpMatrix lhs = l_hat(qd.N(), qd.mode()).embed_at(1, k);
    for (int r = 2; r <= k; ++r) {
        OpMatrix factor = copy_overline(l_hat(qd.N(), qd.mode()), r, k, R) -
                          promote(p_matrix_op(qd, r, k));
        lhs = lhs * factor;
    }
    OpMatrix rhs = m_chain(k, k, R) * d_chain_desc(k, k, R) *
                   promote(jm_inverse_product(qd, k, k));
    return qd.matrix_equal(lhs, rhs, w);
}

bool verify_classical_p_limit(const QuantumDouble& qd, int k, Witness* w) {
    if (!qd.mode().is_exact())
        throw guard_error("the classical limit check needs exact mode");
    TensorOp p = p_matrix_op(qd, k, k);
    TensorOp at1 = specialize(p, Rational(1));
    QMode cl = QMode::at(Rational(1));
    TensorOp expect(qd.N(), k, cl);
    if (k == 1) {
        expect = TensorOp::identity(qd.N(), 1, cl);
    } else {
        for (int i = 1; i <= k - 1; ++i)
            expect = expect + site_transposition(i, k, k, qd.N(), cl);
    }
    if (at1 == expect) return true;
    if (w) w->what = "classical limit differs from the transposition sum";
    return false;
}

bool verify_projected_capelli(const QuantumDouble& qd, const Partition& lambda,
                              const StdTableau& T, Witness* w) {
    int k = lambda.weight();
    const TensorOp& R = qd.R();
    qd.mode().require_generic();
    HeckeElement e = primitive_idempotent(lambda, T, qd.mode());
    TensorOp E = rho_r(e, R, k);
    TensorOp prod = TensorOp::identity(qd.N(), k, qd.mode());
    Scalar scalar = Scalar::one(qd.mode());
    for (int s = 1; s <= k; ++s) {
        TensorOp jinv = jm_image_inv(s, k, R);
        Scalar ev = Scalar::q_power(-2 * T.content(s), qd.mode());
        if (!(jinv * E == E.scaled(ev)) || !(E * jinv == E.scaled(ev))) {
            if (w)
                w->what = "Jucys-Murphy eigenvalue law fails at s = " + std::to_string(s);
            return false;
        }
        prod = prod * jinv;
        scalar *= ev;
    }
    if (!(prod * E == E.scaled(scalar))) {
        if (w) w->what = "projected product does not collapse to the content scalar";
        return false;
    }
    return true;
}

bool verify_theorem22(const QuantumDouble& qd, const HeckeElement& zQ, int k,
                      std::vector<Scalar>* coeffs_out, Witness* w) {
    NcPoly oc = ordered_casimir(qd, zQ, k);
    if (!qd.is_central(oc, Scope::LGens, w)) return false;
    // expansion over the characteristic span of the Euler algebra: images of
    // all basis elements of every lower order
    std::vector<NcPoly> gens;
    for (int kp = 1; kp <= k; ++kp)
        for (const Perm& perm : symmetric_group(kp)) {
            HeckeElement z(kp, qd.mode());
            z.add_term(perm, Scalar::one(qd.mode()));
            gens.push_back(ch(qd, z, kp, Carrier::LHat).value);
        }
    auto sol = qd.solve_in_span(oc, gens);
    if (!sol) {
        if (w) w->what = "ordered Casimir lies outside the Casimir span";
        return false;
    }
    if (coeffs_out) *coeffs_out = *sol;
    return true;
}

} // namespace recalc
