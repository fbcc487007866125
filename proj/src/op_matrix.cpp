#include "recalc/op_matrix.hpp"

namespace recalc {

OpMatrix promote(const TensorOp& X) {
    OpMatrix out(X.dim(), X.sites(), X.mode());
    for (auto& [k, v] : X.entries())
        out.raw().emplace(k, NcPoly::constant(v));
    return out;
}

OpMatrix gen_matrix(GenKind kind, int N, const QMode& mode) {
    OpMatrix out(N, 1, mode);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            out.set(uint32_t(i - 1), uint32_t(j - 1), NcPoly::gen(kind, i, j, mode));
    return out;
}

OpMatrix l_hat(int N, const QMode& mode) {
    return gen_matrix(GenKind::M, N, mode) * gen_matrix(GenKind::Del, N, mode);
}

OpMatrix k_hat(int N, const QMode& mode) {
    Scalar gap = Scalar::q(mode) - Scalar::q_power(-1, mode);
    return promote(TensorOp::identity(N, 1, mode)) - l_hat(N, mode).scaled(gap);
}

namespace {

OpMatrix copy_walk(const OpMatrix& X, int r, int k, const TensorOp& R, bool underline) {
    if (X.sites() != 1) throw shape_error("matrix copies start from a one-site matrix");
    if (r < 1 || r > k) throw shape_error("copy index exceeds the site count");
    OpMatrix cur = X.embed_at(1, k);
    TensorOp Rinv = tensor_inverse(R);
    for (int s = 1; s < r; ++s) {
        TensorOp left = (underline ? Rinv : R).embed_at(s, k);
        TensorOp right = (underline ? R : Rinv).embed_at(s, k);
        cur = left * cur * right;
    }
    return cur;
}

} // namespace

OpMatrix copy_overline(const OpMatrix& X, int r, int k, const TensorOp& R) {
    return copy_walk(X, r, k, R, false);
}

OpMatrix copy_underline(const OpMatrix& X, int r, int k, const TensorOp& R) {
    return copy_walk(X, r, k, R, true);
}

// Ascending product of overline copies of a one-site matrix, reusing the
// previous copy at each step.
OpMatrix overline_chain(const OpMatrix& X, int len, int k, const TensorOp& R) {
    if (len < 1) throw shape_error("empty chain");
    TensorOp Rinv = tensor_inverse(R);
    OpMatrix copy = X.embed_at(1, k);
    OpMatrix acc = copy;
    for (int r = 2; r <= len; ++r) {
        TensorOp Rr = R.embed_at(r - 1, k);
        TensorOp Rri = Rinv.embed_at(r - 1, k);
        copy = Rr * copy * Rri;
        acc = acc * copy;
    }
    return acc;
}

OpMatrix m_chain(int len, int k, const TensorOp& R) {
    return overline_chain(gen_matrix(GenKind::M, R.dim(), R.mode()), len, k, R);
}

OpMatrix d_chain_asc(int len, int k, const TensorOp& R) {
    return overline_chain(gen_matrix(GenKind::Del, R.dim(), R.mode()), len, k, R);
}

OpMatrix d_chain_desc(int len, int k, const TensorOp& R) {
    if (len < 1) throw shape_error("empty chain");
    TensorOp Rinv = tensor_inverse(R);
    OpMatrix copy = gen_matrix(GenKind::Del, R.dim(), R.mode()).embed_at(1, k);
    OpMatrix acc = copy;
    for (int r = 2; r <= len; ++r) {
        TensorOp Rr = R.embed_at(r - 1, k);
        TensorOp Rri = Rinv.embed_at(r - 1, k);
        copy = Rr * copy * Rri;
        acc = copy * acc;
    }
    return acc;
}

OpMatrix l_chain(int len, int k, const TensorOp& R) {
    return overline_chain(l_hat(R.dim(), R.mode()), len, k, R);
}

OpMatrix k_chain_desc(int from, int to, int k, const TensorOp& R) {
    if (from < to) throw shape_error("descending chain expects from >= to");
    OpMatrix acc = copy_underline(k_hat(R.dim(), R.mode()), from, k, R);
    for (int r = from - 1; r >= to; --r)
        acc = acc * copy_underline(k_hat(R.dim(), R.mode()), r, k, R);
    return acc;
}

OpMatrix r_trace_entries(const OpMatrix& X, const TensorOp& C, const std::vector<int>& sites) {
    OpMatrix weighted = X;
    for (int s : sites) weighted = C.embed_at(s, X.sites()) * weighted;
    return weighted.partial_trace(sites);
}

NcPoly r_trace_all(const OpMatrix& X, const TensorOp& C) {
    std::vector<int> sites;
    for (int s = 1; s <= X.sites(); ++s) sites.push_back(s);
    OpMatrix t = r_trace_entries(X, C, sites);
    return t.get(0, 0);
}

RelationSet relations(RelKind kind, const TensorOp& R) {
    int N = R.dim();
    const QMode& mode = R.mode();
    OpMatrix Rp = promote(R);
    OpMatrix diff(N, 2, mode);
    bool homogeneous = true;
    switch (kind) {
        case RelKind::RE_M: {
            OpMatrix M1 = gen_matrix(GenKind::M, N, mode).embed_at(1, 2);
            diff = Rp * M1 * Rp * M1 - M1 * Rp * M1 * Rp;
            break;
        }
        case RelKind::RE_D: {
            OpMatrix Ri = promote(tensor_inverse(R));
            OpMatrix D1 = gen_matrix(GenKind::Del, N, mode).embed_at(1, 2);
            diff = Ri * D1 * Ri * D1 - D1 * Ri * D1 * Ri;
            break;
        }
        case RelKind::PERM: {
            OpMatrix Ri = promote(tensor_inverse(R));
            OpMatrix M1 = gen_matrix(GenKind::M, N, mode).embed_at(1, 2);
            OpMatrix D1 = gen_matrix(GenKind::Del, N, mode).embed_at(1, 2);
            diff = D1 * Rp * M1 * Rp - Rp * M1 * Ri * D1 - Rp;
            homogeneous = false;
            break;
        }
    }
    RelationSet out{kind, homogeneous, {}};
    for (auto& [k, v] : diff.entries()) out.entries.push_back(v);
    return out;
}

} // namespace recalc
