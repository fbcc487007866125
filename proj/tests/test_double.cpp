#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "recalc/quantum_double.hpp"

using namespace recalc;

namespace {

const QMode EX = QMode::exact();

NcPoly mg(int i, int j, const QMode& m = EX) { return NcPoly::gen(GenKind::M, i, j, m); }
NcPoly dg(int i, int j, const QMode& m = EX) { return NcPoly::gen(GenKind::Del, i, j, m); }

NcPoly random_m_poly(std::mt19937_64& rng, int N, int deg, const QMode& m) {
    NcPoly p;
    for (int t = 0; t < 3; ++t) {
        Word w;
        int len = 1 + int(rng() % deg);
        for (int s = 0; s < len; ++s)
            w.push_back(gen_code(GenKind::M, 1 + int(rng() % N), 1 + int(rng() % N)));
        p.add_term(w, Scalar::integer(long(rng() % 5) - 2, m));
    }
    return p;
}

NcPoly random_d_poly(std::mt19937_64& rng, int N, int deg, const QMode& m) {
    NcPoly p;
    for (int t = 0; t < 2; ++t) {
        Word w;
        int len = int(rng() % (deg + 1));
        for (int s = 0; s < len; ++s)
            w.push_back(gen_code(GenKind::Del, 1 + int(rng() % N), 1 + int(rng() % N)));
        p.add_term(w, Scalar::integer(long(rng() % 5) - 2, m));
    }
    return p;
}

NcPoly random_mixed_poly(std::mt19937_64& rng, int N, int len, const QMode& m) {
    NcPoly p;
    for (int t = 0; t < 3; ++t) {
        Word w;
        for (int s = 0; s < len; ++s)
            w.push_back(gen_code(rng() % 2 ? GenKind::M : GenKind::Del,
                                 1 + int(rng() % N), 1 + int(rng() % N)));
        p.add_term(w, Scalar::integer(long(rng() % 5) - 2, m));
    }
    return p;
}

} // namespace

TEST_CASE("exchange rule for one generator pair") {
    // N = 1: d m = q^-2 m d + q^-1
    QuantumDouble qd(dj_r_matrix(1, EX));
    NcPoly split = qd.reorder_normal(dg(1, 1) * mg(1, 1)).poly;
    NcPoly expect = (mg(1, 1) * dg(1, 1)).scaled(Scalar::q_power(-2, EX)) +
                    NcPoly::constant(Scalar::q_power(-1, EX));
    CHECK(split == expect);
}

TEST_CASE("classical exchange at the flip") {
    QMode cl = QMode::at(Rational(1));
    QuantumDouble qd(flip(2, cl));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int s = 1; s <= 2; ++s) {
                    NcPoly split = qd.reorder_normal(dg(i, j, cl) * mg(k, s, cl)).poly;
                    NcPoly expect = mg(k, s, cl) * dg(i, j, cl);
                    if (i == s && k == j)
                        expect += NcPoly::one(cl);
                    CHECK(split == expect);
                }
}

TEST_CASE("exchange relations rewrite to zero") {
    for (int N : {2, 3}) {
        QMode m = N == 2 ? EX : QMode::at(rat(3, 2));
        QuantumDouble qd(dj_r_matrix(N, m));
        for (const NcPoly& rel : relations(RelKind::PERM, qd.R()).entries)
            CHECK(qd.reorder_normal(rel).poly.is_zero());
    }
}

TEST_CASE("reordering is idempotent and class-preserving") {
    QuantumDouble qd(dj_r_matrix(2, EX));
    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
        NcPoly p = random_mixed_poly(rng, 2, 3, EX);
        NcPoly s = qd.reorder_normal(p).poly;
        CHECK(qd.reorder_normal(s).poly == s);
        CHECK(qd.alg_equal(p, s));
    }
}

TEST_CASE("counit projection") {
    QuantumDouble qd(dj_r_matrix(1, EX));
    CHECK(QuantumDouble::counit_project(qd.reorder_normal(mg(1, 1) * dg(1, 1))).is_zero());
    NcPoly f = mg(1, 1) + NcPoly::constant(Scalar::integer(3, EX));
    CHECK(QuantumDouble::counit_project(qd.reorder_normal(f)) == f);
    // d m at N = 1 acts as the scalar q^-1
    NcPoly acted = QuantumDouble::counit_project(qd.reorder_normal(dg(1, 1) * mg(1, 1)));
    CHECK(acted == NcPoly::constant(Scalar::q_power(-1, EX)));
}

TEST_CASE("quotient dimensions certify flatness") {
    QuantumDouble qd(dj_r_matrix(2, EX));
    int expect[] = {1, 4, 10, 20, 35};
    for (int d = 0; d <= 4; ++d) {
        QuotientInfo mi = qd.quotient_info(GenKind::M, d);
        CHECK(mi.dim == expect[d]);
        CHECK(mi.matches_classical);
        QuotientInfo di = qd.quotient_info(GenKind::Del, d);
        CHECK(di.dim == expect[d]);
        CHECK(di.matches_classical);
    }
    CHECK_THROWS_AS(qd.quotient_info(GenKind::M, 5), guard_error);

    QuantumDouble q1(dj_r_matrix(1, EX));
    for (int d = 1; d <= 4; ++d) CHECK(q1.quotient_info(GenKind::M, d).dim == 1);
}

TEST_CASE("super quotient dimensions differ from the even case") {
    QuantumDouble qd(dj_super_r_matrix(1, 1, EX));
    QuotientInfo i2 = qd.quotient_info(GenKind::M, 2);
    CHECK(i2.dim == 8);                  // 2 even + 2 odd generators
    CHECK(!i2.matches_classical);
}

TEST_CASE("algebra equality") {
    QuantumDouble qd(dj_r_matrix(2, EX));
    std::mt19937_64 rng(7);
    NcPoly a = random_mixed_poly(rng, 2, 3, EX);
    CHECK(qd.alg_equal(a, a));

    for (const NcPoly& rel : relations(RelKind::RE_M, qd.R()).entries)
        CHECK(qd.alg_equal(rel, NcPoly()));
    for (const NcPoly& rel : relations(RelKind::RE_D, qd.R()).entries)
        CHECK(qd.alg_equal(rel, NcPoly()));

    // ideal multiples reduce to zero as well
    const auto& rels = relations(RelKind::RE_M, qd.R()).entries;
    NcPoly u = mg(2, 1);
    CHECK(qd.alg_equal(u * rels[1], NcPoly()));
    CHECK(qd.alg_equal(rels[1] * u, NcPoly()));

    // a genuinely nonzero element comes with a witness
    Witness w;
    CHECK(!qd.alg_equal(mg(1, 2) * mg(1, 1), mg(1, 1) * mg(1, 2), &w));
    CHECK(!w.what.empty());
}

TEST_CASE("matrix action examples") {
    QuantumDouble qd(dj_r_matrix(2, EX));
    const TensorOp& R = qd.R();
    OpMatrix D1 = gen_matrix(GenKind::Del, 2, EX).embed_at(1, 2);
    OpMatrix M2bar = copy_overline(gen_matrix(GenKind::M, 2, EX), 2, 2, R);
    CHECK(qd.act_matrix(D1, M2bar) == promote(qd.Rinv()));

    // D_1 acting on M_2bar M_3bar
    OpMatrix D1_3 = gen_matrix(GenKind::Del, 2, EX).embed_at(1, 3);
    OpMatrix M2b = copy_overline(gen_matrix(GenKind::M, 2, EX), 2, 3, R);
    OpMatrix M3b = copy_overline(gen_matrix(GenKind::M, 2, EX), 3, 3, R);
    OpMatrix lhs = qd.act_matrix(D1_3, M2b * M3b);
    TensorOp R1i = tensor_inverse(R).embed_at(1, 3);
    TensorOp R2i = tensor_inverse(R).embed_at(2, 3);
    OpMatrix rhs = M3b * promote(R1i) + M2b * promote(R1i * R2i * R1i);
    CHECK(qd.matrix_equal(lhs, rhs));
}

TEST_CASE("entrywise action gives the B matrix") {
    for (int N : {2, 3}) {
        QMode m = N == 2 ? EX : QMode::at(rat(5, 3));
        QuantumDouble qd(dj_r_matrix(N, m));
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                for (int k = 1; k <= N; ++k)
                    for (int s = 1; s <= N; ++s) {
                        NcPoly acted = qd.act(dg(i, j, m), mg(k, s, m));
                        NcPoly expect;
                        if (i == s)
                            expect = NcPoly::constant(
                                qd.skew().b.get(uint32_t(k - 1), uint32_t(j - 1)));
                        CHECK(acted == expect);
                    }
    }
}

TEST_CASE("action is a representation") {
    QuantumDouble qd(dj_r_matrix(2, EX));
    std::mt19937_64 rng(23);
    for (int t = 0; t < 8; ++t) {
        NcPoly X = random_d_poly(rng, 2, 2, EX);
        NcPoly Y = random_d_poly(rng, 2, 2, EX);
        NcPoly f = random_m_poly(rng, 2, 3, EX);
        CHECK(qd.alg_equal(qd.act(X * Y, f), qd.act(X, qd.act(Y, f))));
    }
}

TEST_CASE("centrality decisions") {
    QuantumDouble qd(dj_r_matrix(2, EX));
    CHECK(qd.is_central(NcPoly::one(EX), Scope::MGens));

    // Tr_R M is central; a bare generator is not
    NcPoly trm;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            trm += NcPoly::gen(GenKind::M, i, j, EX)
                       .scaled(qd.C().get(uint32_t(j - 1), uint32_t(i - 1)));
    CHECK(qd.is_central(trm, Scope::MGens));
    Witness w;
    CHECK(!qd.is_central(mg(1, 2), Scope::MGens, &w));
    CHECK(!w.where.empty());
}

TEST_CASE("characteristic membership") {
    QuantumDouble qd(dj_r_matrix(2, EX));
    NcPoly trm;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            trm += NcPoly::gen(GenKind::M, i, j, EX)
                       .scaled(qd.C().get(uint32_t(j - 1), uint32_t(i - 1)));
    CHECK(qd.char_membership(trm));
    CHECK(qd.char_membership(trm * trm));       // products stay inside
    CHECK(!qd.char_membership(mg(1, 2)));
    CHECK(!qd.char_membership(mg(1, 1) * mg(2, 2)));
}

TEST_CASE("span solving") {
    QuantumDouble qd(dj_r_matrix(2, EX));
    NcPoly a = mg(1, 1) * mg(2, 2);
    NcPoly b = mg(1, 2) * mg(2, 1);
    NcPoly target = a.scaled(Scalar::integer(2, EX)) + b.scaled(Scalar::integer(-3, EX));
    auto sol = qd.solve_in_span(target, {a, b});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Scalar::integer(2, EX));
    CHECK((*sol)[1] == Scalar::integer(-3, EX));
    CHECK(!qd.solve_in_span(mg(1, 1), {a, b}).has_value());
}

TEST_CASE("matrix equality emits entry witnesses") {
    QuantumDouble qd(dj_r_matrix(2, EX));
    OpMatrix A = gen_matrix(GenKind::M, 2, EX);
    OpMatrix B = A;
    B.set(0, 1, B.get(0, 1) + NcPoly::one(EX));
    Witness w;
    CHECK(!qd.matrix_equal(A, B, &w));
    CHECK(w.where.find("entry") != std::string::npos);
    CHECK(qd.matrix_equal(A, A));
}
