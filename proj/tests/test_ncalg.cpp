#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "recalc/op_matrix.hpp"

using namespace recalc;

namespace {

const QMode EX = QMode::exact();

// Test-local rank oracle: Gaussian elimination of the coefficient vectors of
// a set of polynomials over their word support.
int span_rank(const std::vector<NcPoly>& polys) {
    std::map<Word, int> col_of;
    for (const NcPoly& p : polys)
        for (auto& [w, c] : p.terms())
            col_of.try_emplace(w, int(col_of.size()));
    std::vector<std::map<int, Scalar>> rows;
    for (const NcPoly& p : polys) {
        if (p.is_zero()) continue;
        std::map<int, Scalar> row;
        for (auto& [w, c] : p.terms()) row[col_of[w]] = c;
        rows.push_back(std::move(row));
    }
    std::map<int, std::map<int, Scalar>> pivots;   // leading col -> row
    int rank = 0;
    for (auto& row : rows) {
        std::map<int, Scalar> cur = row;
        for (;;) {
            if (cur.empty()) break;
            int lead = cur.begin()->first;
            auto pit = pivots.find(lead);
            if (pit == pivots.end()) {
                Scalar inv = cur.begin()->second.inverse();
                for (auto& [c, v] : cur) v *= inv;
                pivots.emplace(lead, cur);
                ++rank;
                break;
            }
            Scalar f = cur.begin()->second;
            for (auto& [c, v] : pit->second) {
                auto it = cur.find(c);
                Scalar nv = (it == cur.end() ? Scalar::zero(EX) : it->second) - f * v;
                if (nv.is_zero())
                    cur.erase(c);
                else
                    cur[c] = nv;
            }
        }
    }
    return rank;
}

NcPoly random_poly(std::mt19937_64& rng, int N, int len) {
    NcPoly p;
    for (int t = 0; t < 3; ++t) {
        Word w;
        for (int s = 0; s < len; ++s)
            w.push_back(gen_code(rng() % 2 ? GenKind::M : GenKind::Del,
                                 1 + int(rng() % N), 1 + int(rng() % N)));
        p.add_term(w, Scalar::integer(long(rng() % 7) - 3, EX));
    }
    return p;
}

OpMatrix random_opmatrix(std::mt19937_64& rng, int N, int k) {
    OpMatrix X(N, k, EX);
    uint32_t side = X.side();
    for (uint32_t t = 0; t < side; ++t)
        X.add_to(uint32_t(rng() % side), uint32_t(rng() % side), random_poly(rng, N, 1 + int(rng() % 2)));
    return X;
}

} // namespace

TEST_CASE("words and bidegrees") {
    Word w{gen_code(GenKind::M, 1, 2), gen_code(GenKind::Del, 2, 1)};
    CHECK(word_bidegree(w).m == 1);
    CHECK(word_bidegree(w).del == 1);
    CHECK(word_str(w) == "m[1,2]*d[2,1]");

    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        NcPoly a = random_poly(rng, 2, 1 + int(rng() % 3));
        NcPoly b = random_poly(rng, 2, 1 + int(rng() % 3));
        // bidegrees add under concatenation
        NcPoly ab = a * b;
        for (auto& [w, c] : ab.terms()) {
            BiDegree d = word_bidegree(w);
            bool matched = false;
            for (auto& [wa, ca] : a.terms())
                for (auto& [wb, cb] : b.terms()) {
                    BiDegree da = word_bidegree(wa), db = word_bidegree(wb);
                    if (da.m + db.m == d.m && da.del + db.del == d.del) matched = true;
                }
            CHECK(matched);
        }
    }
}

TEST_CASE("generating matrices") {
    OpMatrix M1 = gen_matrix(GenKind::M, 1, EX);
    CHECK(M1.nnz() == 1);
    CHECK(M1.get(0, 0) == NcPoly::gen(GenKind::M, 1, 1, EX));

    OpMatrix M = gen_matrix(GenKind::M, 2, EX);
    CHECK(M.nnz() == 4);
    OpMatrix D = gen_matrix(GenKind::Del, 2, EX);
    CHECK(D.get(1, 0) == NcPoly::gen(GenKind::Del, 2, 1, EX));
}

TEST_CASE("matrix copies") {
    // N = 1: R is a scalar, so the copy equals the original embedding
    TensorOp R1 = dj_r_matrix(1, EX);
    OpMatrix M = gen_matrix(GenKind::M, 1, EX);
    CHECK(copy_overline(M, 2, 2, R1) == M.embed_at(1, 2));

    TensorOp R = dj_r_matrix(2, EX);
    OpMatrix M2bar = copy_overline(gen_matrix(GenKind::M, 2, EX), 2, 4, R);
    OpMatrix M3bar = copy_overline(gen_matrix(GenKind::M, 2, EX), 3, 4, R);

    // copies commute with R_i away from the active sites
    TensorOp R3 = R.embed_at(3, 4);
    CHECK(promote(R3) * M2bar == M2bar * promote(R3));
    TensorOp Ra = R.embed_at(1, 4);
    CHECK(promote(Ra) * M3bar == M3bar * promote(Ra));

    // conjugation inverts: R_1^-1 M_2bar R_1 = M_1
    TensorOp Rinv = tensor_inverse(R);
    CHECK(Rinv.embed_at(1, 4) * M2bar * R.embed_at(1, 4) ==
          gen_matrix(GenKind::M, 2, EX).embed_at(1, 4));

    // recursion: M_3bar = R_2 M_2bar R_2^-1
    CHECK(M3bar == R.embed_at(2, 4) * M2bar * Rinv.embed_at(2, 4));
}

TEST_CASE("shift law for products of copies") {
    TensorOp R = dj_r_matrix(2, EX);
    // M_2bar M_3bar = R_{1->2} M_1 M_2bar R^-1_{2->1}: a braid-only identity
    OpMatrix lhs = copy_overline(gen_matrix(GenKind::M, 2, EX), 2, 3, R) *
                   copy_overline(gen_matrix(GenKind::M, 2, EX), 3, 3, R);
    OpMatrix rhs = r_chain(R, 1, 2, 3) * m_chain(2, 3, R) * r_chain(R, 2, 1, 3, true);
    CHECK(lhs == rhs);

    // mixed copies shift the same way
    OpMatrix dl = copy_overline(gen_matrix(GenKind::Del, 2, EX), 2, 3, R) *
                  copy_overline(l_hat(2, EX), 3, 3, R);
    OpMatrix dl_shift = r_chain(R, 1, 2, 3) *
                        (gen_matrix(GenKind::Del, 2, EX).embed_at(1, 3) *
                         copy_overline(l_hat(2, EX), 2, 3, R)) *
                        r_chain(R, 2, 1, 3, true);
    CHECK(dl == dl_shift);
}

TEST_CASE("chains") {
    // N = 1: l-hat is the single word m d
    OpMatrix L1 = l_hat(1, EX);
    NcPoly md = NcPoly::gen(GenKind::M, 1, 1, EX) * NcPoly::gen(GenKind::Del, 1, 1, EX);
    CHECK(L1.get(0, 0) == md);

    // K-hat + (q - q^-1) L-hat = I
    Scalar gap = Scalar::q(EX) - Scalar::q_power(-1, EX);
    for (int N : {1, 2}) {
        OpMatrix sum = k_hat(N, EX) + l_hat(N, EX).scaled(gap);
        CHECK(sum == promote(TensorOp::identity(N, 1, EX)));
    }

    // every word of a length-2 m-chain has bidegree (2, 0)
    TensorOp R = dj_r_matrix(2, EX);
    OpMatrix mm = m_chain(2, 2, R);
    for (auto& [k, v] : mm.entries())
        for (auto& [w, c] : v.terms())
            CHECK(word_bidegree(w) == BiDegree{2, 0});

    // descending d-chain matches the explicit product
    OpMatrix D1 = gen_matrix(GenKind::Del, 2, EX).embed_at(1, 2);
    OpMatrix D2bar = copy_overline(gen_matrix(GenKind::Del, 2, EX), 2, 2, R);
    CHECK(d_chain_desc(2, 2, R) == D2bar * D1);
    CHECK(d_chain_asc(2, 2, R) == D1 * D2bar);

    // underline K-chain: K_2underline K_1
    OpMatrix K1 = k_hat(2, EX).embed_at(1, 2);
    OpMatrix K2u = copy_underline(k_hat(2, EX), 2, 2, R);
    CHECK(k_chain_desc(2, 1, 2, R) == K2u * K1);
}

TEST_CASE("relation sets") {
    TensorOp R1 = dj_r_matrix(1, EX);
    RelationSet re1 = relations(RelKind::RE_M, R1);
    CHECK(re1.entries.empty());   // a single generator commutes with itself

    TensorOp R = dj_r_matrix(2, EX);
    RelationSet rem = relations(RelKind::RE_M, R);
    CHECK(span_rank(rem.entries) == 6);   // dim of the quadratic relation space
    for (const NcPoly& p : rem.entries)
        for (auto& [w, c] : p.terms())
            CHECK(word_bidegree(w) == BiDegree{2, 0});

    RelationSet red = relations(RelKind::RE_D, R);
    CHECK(span_rank(red.entries) == 6);
    for (const NcPoly& p : red.entries)
        for (auto& [w, c] : p.terms())
            CHECK(word_bidegree(w) == BiDegree{0, 2});

    RelationSet perm = relations(RelKind::PERM, R);
    CHECK(!perm.homogeneous);
    bool saw_const = false;
    for (const NcPoly& p : perm.entries)
        for (auto& [w, c] : p.terms()) {
            BiDegree d = word_bidegree(w);
            CHECK((d == BiDegree{1, 1} || d == BiDegree{0, 0}));
            if (d == BiDegree{0, 0}) saw_const = true;
        }
    CHECK(saw_const);
}

TEST_CASE("matrix algebra") {
    TensorOp R = dj_r_matrix(2, EX);
    std::mt19937_64 rng(9);
    OpMatrix X = random_opmatrix(rng, 2, 2);
    CHECK(promote(TensorOp::identity(2, 2, EX)) * X == X);

    for (int t = 0; t < 5; ++t) {
        OpMatrix A = random_opmatrix(rng, 2, 1);
        OpMatrix B = random_opmatrix(rng, 2, 1);
        OpMatrix C = random_opmatrix(rng, 2, 1);
        CHECK((A * B) * C == A * (B * C));
    }

    // Tr_{R(1,2)}(R_12) = Tr(C): a scalar-valued trace through the matrix layer
    SkewData sk = skew_inverse(R);
    NcPoly traced = r_trace_all(promote(R.embed_at(1, 2)), sk.c);
    CHECK(traced == NcPoly::constant(trace(sk.c)));

    // r_trace_entries over site 2 of C_2 R_12 gives the identity
    OpMatrix tr2 = r_trace_entries(promote(R), sk.c, {2});
    CHECK(tr2 == promote(TensorOp::identity(2, 1, EX)));
}
