#include "recalc/hecke_symmetry.hpp"

namespace recalc {

namespace {

inline uint32_t pair_index(int N, int i, int j) {   // 1-based i, j
    return uint32_t(N) * uint32_t(i - 1) + uint32_t(j - 1);
}

} // namespace

TensorOp flip(int N, const QMode& mode) {
    TensorOp P(N, 2, mode);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            P.set(pair_index(N, j, i), pair_index(N, i, j), Scalar::one(mode));
    return P;
}

TensorOp super_flip(int m, int n, const QMode& mode) {
    int N = m + n;
    TensorOp P(N, 2, mode);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            bool both_odd = i > m && j > m;
            Scalar s = both_odd ? -Scalar::one(mode) : Scalar::one(mode);
            P.set(pair_index(N, j, i), pair_index(N, i, j), s);
        }
    return P;
}

TensorOp dj_r_matrix(int N, const QMode& mode) {
    TensorOp R(N, 2, mode);
    Scalar gap = Scalar::q(mode) - Scalar::q_power(-1, mode);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (i == j) {
                R.set(pair_index(N, i, i), pair_index(N, i, i), Scalar::q(mode));
            } else {
                R.set(pair_index(N, j, i), pair_index(N, i, j), Scalar::one(mode));
                if (i < j) R.set(pair_index(N, i, j), pair_index(N, i, j), gap);
            }
        }
    return R;
}

TensorOp dj_super_r_matrix(int m, int n, const QMode& mode) {
    int N = m + n;
    TensorOp R(N, 2, mode);
    Scalar gap = Scalar::q(mode) - Scalar::q_power(-1, mode);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (i == j) {
                Scalar diag = i <= m ? Scalar::q(mode) : -Scalar::q_power(-1, mode);
                R.set(pair_index(N, i, i), pair_index(N, i, i), diag);
            } else {
                bool both_odd = i > m && j > m;
                Scalar s = both_odd ? -Scalar::one(mode) : Scalar::one(mode);
                R.set(pair_index(N, j, i), pair_index(N, i, j), s);
                if (i < j) R.set(pair_index(N, i, j), pair_index(N, i, j), gap);
            }
        }
    return R;
}

TensorOp check_braid(const TensorOp& R) {
    if (R.sites() != 2) throw shape_error("check_braid expects a 2-site operator");
    TensorOp R1 = R.embed_at(1, 3);
    TensorOp R2 = R.embed_at(2, 3);
    return R1 * R2 * R1 - R2 * R1 * R2;
}

TensorOp check_hecke(const TensorOp& R) {
    if (R.sites() != 2) throw shape_error("check_hecke expects a 2-site operator");
    const QMode& m = R.mode();
    TensorOp I = TensorOp::identity(R.dim(), 2, m);
    return (I.scaled(Scalar::q(m)) - R) * (I.scaled(Scalar::q_power(-1, m)) + R);
}

// --- dense exact Gaussian elimination ---------------------------------------

namespace {

DenseMat to_dense(const TensorOp& X) {
    uint32_t n = X.side();
    DenseMat d(n, std::vector<Scalar>(n, Scalar::zero(X.mode())));
    for (auto& [k, v] : X.entries()) d[k.first][k.second] = v;
    return d;
}

} // namespace

DenseMat dense_inverse(DenseMat a, const QMode& mode) {
    size_t n = a.size();
    DenseMat inv(n, std::vector<Scalar>(n, Scalar::zero(mode)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Scalar::one(mode);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw singular_error("singular operator");
        if (piv != col) {
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
        }
        Scalar d = a[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            if (!a[col][j].is_zero()) a[col][j] *= d;
            if (!inv[col][j].is_zero()) inv[col][j] *= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                if (!a[col][j].is_zero()) a[r][j] += -(f * a[col][j]);
                if (!inv[col][j].is_zero()) inv[r][j] += -(f * inv[col][j]);
            }
        }
    }
    return inv;
}

TensorOp tensor_inverse(const TensorOp& X) {
    uint32_t n = X.side();
    DenseMat inv = dense_inverse(to_dense(X), X.mode());
    TensorOp out(X.dim(), X.sites(), X.mode());
    for (uint32_t r = 0; r < n; ++r)
        for (uint32_t c = 0; c < n; ++c)
            if (!inv[r][c].is_zero()) out.set(r, c, inv[r][c]);
    return out;
}

int tensor_rank(const TensorOp& X) {
    uint32_t n = X.side();
    DenseMat a = to_dense(X);
    int rank = 0;
    uint32_t row = 0;
    for (uint32_t col = 0; col < n && row < n; ++col) {
        uint32_t piv = row;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        Scalar d = a[row][col].inverse();
        for (uint32_t j = col; j < n; ++j)
            if (!a[row][j].is_zero()) a[row][j] *= d;
        for (uint32_t r = row + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (uint32_t j = col; j < n; ++j)
                if (!a[row][j].is_zero()) a[r][j] += -(f * a[row][j]);
        }
        ++rank;
        ++row;
    }
    return rank;
}

SkewData skew_inverse(const TensorOp& R) {
    if (R.sites() != 2) throw shape_error("skew_inverse expects a 2-site operator");
    int N = R.dim();
    const QMode& mode = R.mode();

    // The defining system factors: with S[(i,j),(c,a)] = R[(i,a),(j,c)],
    // Psi[(c,k),(a,l)] = Sinv[(c,a),(l,k)] solves Tr_2 R_12 Psi_23 = P_13.
    TensorOp S(N, 2, mode);
    for (auto& [k, v] : R.entries()) {
        uint32_t i = k.first / uint32_t(N), a = k.first % uint32_t(N);
        uint32_t j = k.second / uint32_t(N), c = k.second % uint32_t(N);
        S.set(i * uint32_t(N) + j, c * uint32_t(N) + a, v);
    }
    TensorOp Sinv = tensor_inverse(S);   // singular_error for non-skew-invertible R

    SkewData out{TensorOp(N, 2, mode), TensorOp(N, 1, mode), TensorOp(N, 1, mode)};
    for (auto& [k, v] : Sinv.entries()) {
        uint32_t c = k.first / uint32_t(N), a = k.first % uint32_t(N);
        uint32_t l = k.second / uint32_t(N), kk = k.second % uint32_t(N);
        out.psi.set(c * uint32_t(N) + kk, a * uint32_t(N) + l, v);
    }
    for (uint32_t a = 0; a < uint32_t(N); ++a)
        for (uint32_t c = 0; c < uint32_t(N); ++c) {
            Scalar cv = Scalar::zero(mode);
            Scalar bv = Scalar::zero(mode);
            for (uint32_t k = 0; k < uint32_t(N); ++k) {
                cv += out.psi.get(a * uint32_t(N) + k, c * uint32_t(N) + k);
                bv += out.psi.get(k * uint32_t(N) + a, k * uint32_t(N) + c);
            }
            if (!cv.is_zero()) out.c.set(a, c, cv);
            if (!bv.is_zero()) out.b.set(a, c, bv);
        }
    return out;
}

TensorOp r_trace(const TensorOp& X, const TensorOp& C, const std::vector<int>& sites) {
    TensorOp weighted = X;
    for (int s : sites) weighted = C.embed_at(s, X.sites()) * weighted;
    return weighted.partial_trace(sites);
}

Scalar trace(const TensorOp& X) {
    Scalar t = Scalar::zero(X.mode());
    for (auto& [k, v] : X.entries())
        if (k.first == k.second) t += v;
    return t;
}

Scalar scalar_of(const TensorOp& X) {
    if (X.side() != 1) throw shape_error("scalar_of expects a 0-site operator");
    return X.get(0, 0);
}

TensorOp r_chain(const TensorOp& R, int from, int to, int k, bool inv) {
    TensorOp factor = inv ? tensor_inverse(R) : R;
    TensorOp acc = TensorOp::identity(R.dim(), k, R.mode());
    int step = to >= from ? 1 : -1;
    for (int i = from;; i += step) {
        acc = acc * factor.embed_at(i, k);
        if (i == to) break;
    }
    return acc;
}

TensorOp jm_image(int r, int k, const TensorOp& R) {
    if (r < 1 || r > k) throw shape_error("Jucys-Murphy index out of range");
    TensorOp J = TensorOp::identity(R.dim(), k, R.mode());
    for (int s = 2; s <= r; ++s) {
        TensorOp Rs = R.embed_at(s - 1, k);
        J = Rs * J * Rs;
    }
    return J;
}

TensorOp jm_image_inv(int r, int k, const TensorOp& R) {
    if (r < 1 || r > k) throw shape_error("Jucys-Murphy index out of range");
    TensorOp Rinv = tensor_inverse(R);
    TensorOp J = TensorOp::identity(R.dim(), k, R.mode());
    for (int s = 2; s <= r; ++s) {
        TensorOp Rs = Rinv.embed_at(s - 1, k);
        J = Rs * J * Rs;
    }
    return J;
}

TensorOp jm_image_shifted(int s, int n, int k, const TensorOp& R) {
    if (s < 1 || n < 0 || n + s > k) throw shape_error("shifted Jucys-Murphy index out of range");
    if (s == 1) return TensorOp::identity(R.dim(), k, R.mode());
    return r_chain(R, n + s - 1, n + 1, k) * r_chain(R, n + 1, n + s - 1, k);
}

TensorOp jm_image_shifted_inv(int s, int n, int k, const TensorOp& R) {
    if (s < 1 || n < 0 || n + s > k) throw shape_error("shifted Jucys-Murphy index out of range");
    if (s == 1) return TensorOp::identity(R.dim(), k, R.mode());
    return r_chain(R, n + s - 1, n + 1, k, true) * r_chain(R, n + 1, n + s - 1, k, true);
}

TensorOp specialize(const TensorOp& X, const Rational& q0) {
    QMode target = QMode::at(q0);
    TensorOp out(X.dim(), X.sites(), target);
    for (auto& [k, v] : X.entries()) {
        Scalar s = Scalar::rational(v.specialize(q0), target);
        if (!s.is_zero()) out.set(k.first, k.second, s);
    }
    return out;
}

TensorOp site_transposition(int a, int b, int k, int N, const QMode& mode) {
    if (a < 1 || b < 1 || a > k || b > k || a == b)
        throw shape_error("bad transposition sites");
    TensorOp out(N, k, mode);
    uint32_t side = checked_side(N, k);
    std::vector<uint32_t> d(static_cast<size_t>(k));
    TensorOp probe(N, k, mode);   // digit helper only
    for (uint32_t col = 0; col < side; ++col) {
        probe.digits(col, d);
        std::swap(d[size_t(a - 1)], d[size_t(b - 1)]);
        uint32_t row = 0;
        for (int t = 0; t < k; ++t) row = row * uint32_t(N) + d[size_t(t)];
        out.set(row, col, Scalar::one(mode));
    }
    return out;
}

} // namespace recalc
