#include "recalc/quantum_double.hpp"

#include <algorithm>
#include <sstream>

#include "recalc/hecke_algebra.hpp"

namespace recalc {

namespace {

long binom_long(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

int gen_index(GenCode g, int N) {   // 0-based flat index of the generator
    return (code_i(g) - 1) * N + (code_j(g) - 1);
}

GenCode code_of_index(GenKind kind, int gi, int N) {
    return gen_code(kind, gi / N + 1, gi % N + 1);
}

} // namespace

// --- quotient data -----------------------------------------------------------

// Columns at degree d are pairs (basis slot of degree d-1) * N^2 + generator.
// subst maps a pivot column to its expansion over non-pivot columns; the
// expansion rows never contain pivot columns (full reduced form).
struct QuantumDouble::QB {
    int degree = 0;
    std::unordered_map<uint32_t, std::map<uint32_t, Scalar>> subst;
    std::vector<uint32_t> basis_cols;
    std::unordered_map<uint32_t, int> basis_index;
    std::vector<Word> reps;
    bool matches_classical = true;
    // two-letter reduced relations, reused for all higher degrees (built in
    // the degree-2 object): list of (column, coeff) rows
    std::vector<std::map<uint32_t, Scalar>> reduced_rels;
    std::map<Word, std::vector<std::pair<int, Scalar>>> coord_memo;

    void eliminate(std::map<uint32_t, Scalar>& row) const;
    void insert(std::map<uint32_t, Scalar> row);
};

// pivot columns never regenerate: substitution rows hold non-pivot columns
// only, so one collection pass suffices
void QuantumDouble::QB::eliminate(std::map<uint32_t, Scalar>& row) const {
    std::vector<std::pair<uint32_t, Scalar>> hits;
    for (auto& [c, v] : row)
        if (subst.count(c)) hits.emplace_back(c, v);
    for (auto& [c, f] : hits) row.erase(c);
    for (auto& [c, f] : hits) {
        for (auto& [bc, sc] : subst.at(c)) {
            Scalar add = f * sc;
            if (add.is_zero()) continue;
            auto [it, fresh] = row.try_emplace(bc, add);
            if (!fresh) {
                it->second += add;
                if (it->second.is_zero()) row.erase(it);
            }
        }
    }
}

void QuantumDouble::QB::insert(std::map<uint32_t, Scalar> row) {
    eliminate(row);
    if (row.empty()) return;
    uint32_t p = row.begin()->first;
    Scalar inv = row.begin()->second.inverse();
    row.erase(row.begin());
    std::map<uint32_t, Scalar> sub;
    for (auto& [c, v] : row) sub.emplace(c, -(v * inv));
    // keep all stored rows free of the new pivot column
    for (auto& [pc, srow] : subst) {
        auto hit = srow.find(p);
        if (hit == srow.end()) continue;
        Scalar f = hit->second;
        srow.erase(hit);
        for (auto& [bc, sc] : sub) {
            Scalar add = f * sc;
            if (add.is_zero()) continue;
            auto [it, fresh] = srow.try_emplace(bc, add);
            if (!fresh) {
                it->second += add;
                if (it->second.is_zero()) srow.erase(it);
            }
        }
    }
    subst.emplace(p, std::move(sub));
}

QuantumDouble::QuantumDouble(TensorOp R, std::optional<Caps> caps)
    : R_(std::move(R)),
      Rinv_(tensor_inverse(R_)),
      skew_(skew_inverse(R_)),
      caps_(caps ? *caps : Caps::defaults_for(R_.dim())) {
    if (R_.sites() != 2) throw shape_error("the double is built from a 2-site operator");
}

QuantumDouble::~QuantumDouble() = default;

// --- exchange tables ----------------------------------------------------------

void QuantumDouble::build_tables() const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (tables_built_) return;
    const int N = R_.dim();
    const QMode& mode = R_.mode();
    const int N3 = N * N * N;
    auto idx3 = [N](int a, int b, int c) { return (a * N + b) * N + c; };

    // coefficient map (j,k,l) x (p,r,t) of the left-hand side D_1 R M_1 R;
    // independent of the free derivative row index i
    DenseMat mmap(size_t(N3), std::vector<Scalar>(size_t(N3), Scalar::zero(mode)));
    for (auto& [k1, v1] : R_.entries()) {
        int p = int(k1.first) / N, j = int(k1.first) % N;
        int r = int(k1.second) / N, s = int(k1.second) % N;
        for (auto& [k2, v2] : R_.entries()) {
            int t = int(k2.first) / N, s2 = int(k2.first) % N;
            if (s2 != s) continue;
            int kk = int(k2.second) / N, l = int(k2.second) % N;
            mmap[size_t(idx3(j, kk, l))][size_t(idx3(p, r, t))] += v1 * v2;
        }
    }
    DenseMat minv;
    try {
        minv = dense_inverse(std::move(mmap), mode);
    } catch (const singular_error&) {
        throw singular_error("exchange relations are not solvable for this operator");
    }

    for (int i = 0; i < N; ++i) {
        // right-hand side per equation index (j,k,l)
        std::vector<NcPoly> rhs(static_cast<size_t>(N3));
        for (auto& [k1, v1] : R_.entries()) {
            int i2 = int(k1.first) / N, j = int(k1.first) % N;
            if (i2 != i) continue;
            int e = int(k1.second) / N, s = int(k1.second) % N;
            for (auto& [k2, v2] : Rinv_.entries()) {
                int f = int(k2.first) / N, s2 = int(k2.first) % N;
                if (s2 != s) continue;
                int u = int(k2.second) / N, l = int(k2.second) % N;
                Scalar cval = v1 * v2;
                for (int kup = 0; kup < N; ++kup) {
                    Word w{gen_code(GenKind::M, e + 1, f + 1),
                           gen_code(GenKind::Del, u + 1, kup + 1)};
                    rhs[size_t(idx3(j, kup, l))].add_term(w, cval);
                }
            }
        }
        for (int jj = 0; jj < N; ++jj)
            for (int kk = 0; kk < N; ++kk)
                for (int ll = 0; ll < N; ++ll) {
                    const Scalar* rv = R_.find(uint32_t(i * N + jj), uint32_t(kk * N + ll));
                    if (rv) rhs[size_t(idx3(jj, kk, ll))].add_term(Word{}, *rv);
                }

        for (int p = 0; p < N; ++p)
            for (int r = 0; r < N; ++r)
                for (int t = 0; t < N; ++t) {
                    NcPoly expn;
                    const auto& mrow = minv[size_t(idx3(p, r, t))];
                    for (int c = 0; c < N3; ++c) {
                        if (mrow[size_t(c)].is_zero()) continue;
                        expn += rhs[size_t(c)].scaled(mrow[size_t(c)]);
                    }
                    GenCode dcode = gen_code(GenKind::Del, i + 1, p + 1);
                    GenCode mcode = gen_code(GenKind::M, r + 1, t + 1);
                    NcPoly hom = expn;
                    if (const Scalar* cst = expn.find(Word{}))
                        hom.add_term(Word{}, -*cst);
                    full_table_.emplace(std::make_pair(dcode, mcode), std::move(expn));
                    hom_table_.emplace(std::make_pair(dcode, mcode), std::move(hom));
                }
    }
    tables_built_ = true;
}

// --- reordering ----------------------------------------------------------------

bool QuantumDouble::word_is_split(const Word& w) {
    bool seen_del = false;
    for (GenCode g : w) {
        if (code_kind(g) == GenKind::Del)
            seen_del = true;
        else if (seen_del)
            return false;
    }
    return true;
}

NcPoly QuantumDouble::rewrite(const NcPoly& p, bool homogeneous) const {
    build_tables();
    const auto& table = homogeneous ? hom_table_ : full_table_;
    NcPoly done;
    std::map<Word, Scalar> pending(p.terms().begin(), p.terms().end());
    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = it->first;
        Scalar c = it->second;
        pending.erase(it);
        size_t pos = 0;
        bool found = false;
        for (size_t t = 0; t + 1 < w.size(); ++t) {
            if (code_kind(w[t]) == GenKind::Del && code_kind(w[t + 1]) == GenKind::M) {
                pos = t;
                found = true;
                break;
            }
        }
        if (!found) {
            done.add_term(w, c);
            continue;
        }
        auto tit = table.find({w[pos], w[pos + 1]});
        if (tit == table.end()) throw error("exchange table lookup failed");
        for (auto& [tw, tc] : tit->second.terms()) {
            Word nw;
            nw.reserve(w.size() - 2 + tw.size());
            nw.insert(nw.end(), w.begin(), w.begin() + long(pos));
            nw.insert(nw.end(), tw.begin(), tw.end());
            nw.insert(nw.end(), w.begin() + long(pos) + 2, w.end());
            Scalar nc = c * tc;
            if (nc.is_zero()) continue;
            auto [pit, fresh] = pending.try_emplace(std::move(nw), nc);
            if (!fresh) {
                pit->second += nc;
                if (pit->second.is_zero()) pending.erase(pit);
            }
        }
    }
    return done;
}

SplitForm QuantumDouble::reorder_normal(const NcPoly& p) const {
    return SplitForm{rewrite(p, false)};
}

SplitForm QuantumDouble::order_homogeneous(const NcPoly& p) const {
    return SplitForm{rewrite(p, true)};
}

NcPoly QuantumDouble::counit_project(const SplitForm& s) {
    NcPoly out;
    for (auto& [w, c] : s.poly.terms())
        if (word_bidegree(w).del == 0) out.add_term(w, c);
    return out;
}

NcPoly QuantumDouble::act(const NcPoly& X, const NcPoly& f) const {
    if (f.max_del_degree() != 0)
        throw shape_error("action target must be coordinate-only");
    return counit_project(reorder_normal(X * f));
}

OpMatrix QuantumDouble::act_matrix(const OpMatrix& X, const OpMatrix& F) const {
    OpMatrix prod = X * F;
    OpMatrix out(prod.dim(), prod.sites(), prod.mode());
    for (auto& [k, v] : prod.entries()) {
        NcPoly a = counit_project(reorder_normal(v));
        if (!a.is_zero()) out.set(k.first, k.second, std::move(a));
    }
    return out;
}

OpMatrix QuantumDouble::reorder_matrix(const OpMatrix& X) const {
    OpMatrix out(X.dim(), X.sites(), X.mode());
    for (auto& [k, v] : X.entries()) {
        NcPoly a = reorder_normal(v).poly;
        if (!a.is_zero()) out.set(k.first, k.second, std::move(a));
    }
    return out;
}

OpMatrix QuantumDouble::order_matrix_homogeneous(const OpMatrix& X) const {
    OpMatrix out(X.dim(), X.sites(), X.mode());
    for (auto& [k, v] : X.entries()) {
        NcPoly a = order_homogeneous(v).poly;
        if (!a.is_zero()) out.set(k.first, k.second, std::move(a));
    }
    return out;
}

// --- quotient bases -------------------------------------------------------------

const QuantumDouble::QB& QuantumDouble::quotient(GenKind tag, int degree) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    int cap = tag == GenKind::M ? caps_.max_m_degree : caps_.max_del_degree;
    if (degree > cap)
        throw guard_error("degree cap exceeded: degree " + std::to_string(degree) +
                          " > cap " + std::to_string(cap));
    auto key = std::make_pair(int(tag), degree);
    auto it = quotients_.find(key);
    if (it != quotients_.end()) return *it->second;

    const int N = R_.dim();
    const int ngens = N * N;
    auto qb = std::make_unique<QB>();
    qb->degree = degree;

    if (degree == 0) {
        qb->basis_cols = {0};
        qb->basis_index.emplace(0u, 0);
        qb->reps = {Word{}};
    } else if (degree == 1) {
        for (int g = 0; g < ngens; ++g) {
            qb->basis_cols.push_back(uint32_t(g));
            qb->basis_index.emplace(uint32_t(g), g);
            qb->reps.push_back(Word{code_of_index(tag, g, N)});
        }
    } else {
        const QB& prev = quotient(tag, degree - 1);
        uint32_t ncols = uint32_t(prev.basis_cols.size()) * uint32_t(ngens);

        if (degree == 2) {
            RelationSet rels = relations(tag == GenKind::M ? RelKind::RE_M : RelKind::RE_D, R_);
            for (const NcPoly& r : rels.entries) {
                std::map<uint32_t, Scalar> row;
                for (auto& [w, c] : r.terms()) {
                    uint32_t col = uint32_t(gen_index(w[0], N)) * uint32_t(ngens) +
                                   uint32_t(gen_index(w[1], N));
                    auto [rit, fresh] = row.try_emplace(col, c);
                    if (!fresh) rit->second += c;
                }
                qb->insert(std::move(row));
            }
            // reduced relation basis, reused at every higher degree
            for (auto& [p, sub] : qb->subst) {
                std::map<uint32_t, Scalar> rel;
                rel.emplace(p, Scalar::one(mode()));
                for (auto& [bc, sc] : sub) rel.emplace(bc, -sc);
                qb->reduced_rels.push_back(std::move(rel));
            }
        } else {
            const QB& two = quotient(tag, 2);
            // the degree-d span of the two-sided ideal is generated, over the
            // compressed columns, by (word of length d-2) x (reduced relation)
            std::vector<Word> words;
            Word cur;
            // iterative enumeration of all (d-2)-letter words
            std::vector<int> digits(size_t(degree - 2), 0);
            for (;;) {
                Word w;
                for (int dgt : digits) w.push_back(code_of_index(tag, dgt, N));
                words.push_back(std::move(w));
                int pos = degree - 3;
                while (pos >= 0 && digits[size_t(pos)] == ngens - 1) {
                    digits[size_t(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                digits[size_t(pos)] += 1;
            }
            (void)cur;
            for (const Word& w : words) {
                for (const auto& rel : two.reduced_rels) {
                    std::map<uint32_t, Scalar> row;
                    for (auto& [col2, c] : rel) {
                        int g1 = int(col2) / ngens;
                        int g2 = int(col2) % ngens;
                        Word left = w;
                        left.push_back(code_of_index(tag, g1, N));
                        for (auto& [slot, sc] : word_coords(tag, left)) {
                            uint32_t col = uint32_t(slot) * uint32_t(ngens) + uint32_t(g2);
                            Scalar add = c * sc;
                            if (add.is_zero()) continue;
                            auto [rit, fresh] = row.try_emplace(col, add);
                            if (!fresh) {
                                rit->second += add;
                                if (rit->second.is_zero()) row.erase(rit);
                            }
                        }
                    }
                    qb->insert(std::move(row));
                }
            }
        }

        for (uint32_t col = 0; col < ncols; ++col) {
            if (qb->subst.count(col)) continue;
            qb->basis_index.emplace(col, int(qb->basis_cols.size()));
            qb->basis_cols.push_back(col);
            Word rep = prev.reps[size_t(col) / size_t(ngens)];
            rep.push_back(code_of_index(tag, int(col) % ngens, N));
            qb->reps.push_back(std::move(rep));
        }
    }

    qb->matches_classical =
        long(qb->basis_cols.size()) == binom_long(ngens + degree - 1, degree);
    auto [sit, ok] = quotients_.emplace(key, std::move(qb));
    (void)ok;
    return *sit->second;
}

std::vector<std::pair<int, Scalar>> QuantumDouble::word_coords(GenKind tag, const Word& w) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    int d = int(w.size());
    if (d == 0) return {{0, Scalar::one(mode())}};
    QB& qb = const_cast<QB&>(quotient(tag, d));
    auto mit = qb.coord_memo.find(w);
    if (mit != qb.coord_memo.end()) return mit->second;

    const int ngens = R_.dim() * R_.dim();
    Word prefix(w.begin(), w.end() - 1);
    int g = gen_index(w.back(), R_.dim());
    std::map<int, Scalar> acc;
    for (auto& [slot, c] : word_coords(tag, prefix)) {
        uint32_t col = uint32_t(slot) * uint32_t(ngens) + uint32_t(g);
        auto sit = qb.subst.find(col);
        if (sit == qb.subst.end()) {
            auto [it, fresh] = acc.try_emplace(qb.basis_index.at(col), c);
            if (!fresh) it->second += c;
        } else {
            for (auto& [bc, sc] : sit->second) {
                Scalar add = c * sc;
                if (add.is_zero()) continue;
                auto [it, fresh] = acc.try_emplace(qb.basis_index.at(bc), add);
                if (!fresh) it->second += add;
            }
        }
    }
    std::vector<std::pair<int, Scalar>> out;
    for (auto& [slot, c] : acc)
        if (!c.is_zero()) out.emplace_back(slot, c);
    qb.coord_memo.emplace(w, out);
    return out;
}

QuotientInfo QuantumDouble::quotient_info(GenKind tag, int degree) const {
    const QB& qb = quotient(tag, degree);
    QuotientInfo info;
    info.degree = degree;
    info.dim = int(qb.basis_cols.size());
    info.matches_classical = qb.matches_classical;
    info.basis_reps = qb.reps;
    return info;
}

// --- equality ---------------------------------------------------------------------

std::map<QuantumDouble::CoordKey, Scalar> QuantumDouble::split_coords(const SplitForm& s) const {
    std::map<CoordKey, Scalar> acc;
    for (auto& [w, c] : s.poly.terms()) {
        size_t cut = 0;
        while (cut < w.size() && code_kind(w[cut]) == GenKind::M) ++cut;
        Word mw(w.begin(), w.begin() + long(cut));
        Word dw(w.begin() + long(cut), w.end());
        if (!word_is_split(w)) throw error("split form invariant violated");
        auto mc = word_coords(GenKind::M, mw);
        auto dc = word_coords(GenKind::Del, dw);
        for (auto& [mi, cm] : mc) {
            Scalar base = c * cm;
            for (auto& [di, cd] : dc) {
                Scalar add = base * cd;
                if (add.is_zero()) continue;
                CoordKey key{int(mw.size()), int(dw.size()), mi, di};
                auto [it, fresh] = acc.try_emplace(key, add);
                if (!fresh) {
                    it->second += add;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
    }
    return acc;
}

std::string QuantumDouble::coord_key_str(const CoordKey& k) const {
    auto [mdeg, ddeg, mi, di] = k;
    const QB& qm = quotient(GenKind::M, mdeg);
    const QB& qd = quotient(GenKind::Del, ddeg);
    Word w = qm.reps[size_t(mi)];
    const Word& dwr = qd.reps[size_t(di)];
    w.insert(w.end(), dwr.begin(), dwr.end());
    return word_str(w);
}

bool QuantumDouble::alg_equal(const NcPoly& a, const NcPoly& b, Witness* w) const {
    NcPoly diff = a - b;
    if (diff.is_zero()) return true;
    SplitForm s = reorder_normal(diff);
    if (s.poly.max_m_degree() > caps_.max_m_degree ||
        s.poly.max_del_degree() > caps_.max_del_degree)
        throw guard_error("degree cap exceeded in equality check");
    auto coords = split_coords(s);
    if (coords.empty()) return true;
    if (w) {
        w->what = coord_key_str(coords.begin()->first) + "  coefficient " +
                  coords.begin()->second.str();
    }
    return false;
}

bool QuantumDouble::matrix_equal(const OpMatrix& A, const OpMatrix& B, Witness* w) const {
    require_same_shape(A, B);
    OpMatrix diff = A - B;
    for (auto& [k, v] : diff.entries()) {
        Witness local;
        if (!alg_equal(v, NcPoly(), w ? &local : nullptr)) {
            if (w) {
                w->where = "entry (" + std::to_string(k.first) + "," +
                           std::to_string(k.second) + ")";
                w->what = local.what;
            }
            return false;
        }
    }
    return true;
}

NcPoly QuantumDouble::generator_poly(Scope scope, int i, int j) const {
    const QMode& m = mode();
    switch (scope) {
        case Scope::MGens: return NcPoly::gen(GenKind::M, i, j, m);
        case Scope::DGens: return NcPoly::gen(GenKind::Del, i, j, m);
        case Scope::LGens: {
            NcPoly p;
            for (int k = 1; k <= N(); ++k)
                p += NcPoly::gen(GenKind::M, i, k, m) * NcPoly::gen(GenKind::Del, k, j, m);
            return p;
        }
    }
    throw error("unknown generator scope");
}

bool QuantumDouble::is_central(const NcPoly& p, Scope scope, Witness* w) const {
    for (int i = 1; i <= N(); ++i)
        for (int j = 1; j <= N(); ++j) {
            NcPoly g = generator_poly(scope, i, j);
            Witness local;
            if (!alg_equal(p * g, g * p, w ? &local : nullptr)) {
                if (w) {
                    w->where = "commutator with generator (" + std::to_string(i) + "," +
                               std::to_string(j) + ")";
                    w->what = local.what;
                }
                return false;
            }
        }
    return true;
}

// --- characteristic span -----------------------------------------------------------

struct QuantumDouble::CharSpan {
    // echelon rows over the degree-n coordinate slots, fully reduced
    std::vector<std::map<int, Scalar>> rows;
};

const QuantumDouble::CharSpan& QuantumDouble::char_span(int degree) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = char_spans_.find(degree);
    if (it != char_spans_.end()) return *it->second;

    auto span = std::make_unique<CharSpan>();
    OpMatrix chain = m_chain(degree, degree, R_);
    for (const Perm& perm : symmetric_group(degree)) {
        HeckeElement z(degree, mode());
        z.add_term(perm, Scalar::one(mode()));
        TensorOp img = rho_r(z, R_, degree);
        NcPoly ch = r_trace_all(promote(img) * chain, skew_.c);
        std::map<int, Scalar> row;
        for (auto& [word, c] : ch.terms())
            for (auto& [slot, sc] : word_coords(GenKind::M, word)) {
                Scalar add = c * sc;
                if (add.is_zero()) continue;
                auto [rit, fresh] = row.try_emplace(slot, add);
                if (!fresh) {
                    rit->second += add;
                    if (rit->second.is_zero()) row.erase(rit);
                }
            }
        // reduce against existing rows, insert if independent
        for (auto& er : span->rows) {
            if (row.empty()) break;
            auto hit = row.find(er.begin()->first);
            if (hit == row.end()) continue;
            Scalar f = hit->second;
            for (auto& [c, v] : er) {
                auto [rit, fresh] = row.try_emplace(c, -(f * v));
                if (!fresh) {
                    rit->second += -(f * v);
                    if (rit->second.is_zero()) row.erase(rit);
                }
            }
        }
        if (!row.empty()) {
            Scalar inv = row.begin()->second.inverse();
            for (auto& [c, v] : row) v *= inv;
            // keep rows mutually reduced
            for (auto& er : span->rows) {
                auto hit = er.find(row.begin()->first);
                if (hit == er.end()) continue;
                Scalar f = hit->second;
                for (auto& [c, v] : row) {
                    auto [rit, fresh] = er.try_emplace(c, -(f * v));
                    if (!fresh) {
                        rit->second += -(f * v);
                        if (rit->second.is_zero()) er.erase(rit);
                    }
                }
            }
            span->rows.push_back(std::move(row));
            std::sort(span->rows.begin(), span->rows.end(),
                      [](const auto& a, const auto& b) {
                          return a.begin()->first < b.begin()->first;
                      });
        }
    }
    auto [sit, ok] = char_spans_.emplace(degree, std::move(span));
    (void)ok;
    return *sit->second;
}

bool QuantumDouble::char_membership(const NcPoly& f, Witness* w) const {
    if (f.max_del_degree() != 0)
        throw shape_error("characteristic membership expects a coordinate-only polynomial");
    // degree-by-degree reduction; constants always belong (unit component)
    std::map<int, std::map<int, Scalar>> by_degree;
    for (auto& [word, c] : f.terms()) {
        int n = int(word.size());
        if (n == 0) continue;
        auto& row = by_degree[n];
        for (auto& [slot, sc] : word_coords(GenKind::M, word)) {
            Scalar add = c * sc;
            if (add.is_zero()) continue;
            auto [it, fresh] = row.try_emplace(slot, add);
            if (!fresh) {
                it->second += add;
                if (it->second.is_zero()) row.erase(it);
            }
        }
    }
    for (auto& [n, row0] : by_degree) {
        std::map<int, Scalar> row = row0;
        const CharSpan& span = char_span(n);
        for (auto& er : span.rows) {
            if (row.empty()) break;
            auto hit = row.find(er.begin()->first);
            if (hit == row.end()) continue;
            Scalar f2 = hit->second;
            for (auto& [c, v] : er) {
                auto [rit, fresh] = row.try_emplace(c, -(f2 * v));
                if (!fresh) {
                    rit->second += -(f2 * v);
                    if (rit->second.is_zero()) row.erase(rit);
                }
            }
        }
        if (!row.empty()) {
            if (w) {
                const QB& qm = quotient(GenKind::M, n);
                w->where = "degree " + std::to_string(n);
                w->what = word_str(qm.reps[size_t(row.begin()->first)]) +
                          "  coefficient " + row.begin()->second.str();
            }
            return false;
        }
    }
    return true;
}

std::optional<std::vector<Scalar>> QuantumDouble::solve_in_span(
    const NcPoly& target, const std::vector<NcPoly>& gens) const {
    // coordinates of everything, then a small dense solve
    std::vector<std::map<CoordKey, Scalar>> cols;
    for (const NcPoly& g : gens) cols.push_back(split_coords(reorder_normal(g)));
    std::map<CoordKey, Scalar> t = split_coords(reorder_normal(target));

    std::vector<CoordKey> keys;
    for (auto& m : cols)
        for (auto& [k, v] : m) keys.push_back(k);
    for (auto& [k, v] : t) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    size_t nrows = keys.size(), ncols = gens.size();
    DenseMat a(nrows, std::vector<Scalar>(ncols + 1, Scalar::zero(mode())));
    for (size_t r = 0; r < nrows; ++r) {
        for (size_t c = 0; c < ncols; ++c) {
            auto it = cols[c].find(keys[r]);
            if (it != cols[c].end()) a[r][c] = it->second;
        }
        auto it = t.find(keys[r]);
        if (it != t.end()) a[r][ncols] = it->second;
    }
    // row-reduce the augmented system
    size_t row = 0;
    std::vector<int> pivot_col_of_row;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t piv = row;
        while (piv < nrows && a[piv][col].is_zero()) ++piv;
        if (piv == nrows) {
            pivot_col_of_row.push_back(-1);
            continue;
        }
        std::swap(a[piv], a[row]);
        Scalar inv = a[row][col].inverse();
        for (size_t j = col; j <= ncols; ++j)
            if (!a[row][j].is_zero()) a[row][j] *= inv;
        for (size_t r2 = 0; r2 < nrows; ++r2) {
            if (r2 == row || a[r2][col].is_zero()) continue;
            Scalar f = a[r2][col];
            for (size_t j = col; j <= ncols; ++j)
                if (!a[row][j].is_zero()) a[r2][j] += -(f * a[row][j]);
        }
        pivot_col_of_row.push_back(int(col));
        ++row;
    }
    // consistency
    for (size_t r2 = row; r2 < nrows; ++r2) {
        bool zero = true;
        for (size_t c = 0; c < ncols; ++c)
            if (!a[r2][c].is_zero()) zero = false;
        if (zero && !a[r2][ncols].is_zero()) return std::nullopt;
    }
    std::vector<Scalar> sol(ncols, Scalar::zero(mode()));
    for (size_t r2 = 0; r2 < row; ++r2) {
        int pc = -1;
        for (size_t c = 0; c < ncols; ++c)
            if (!a[r2][c].is_zero()) {
                pc = int(c);
                break;
            }
        if (pc >= 0) sol[size_t(pc)] = a[r2][ncols];
    }
    return sol;
}

const OpMatrix& QuantumDouble::ordered_l_chain(int len, int k) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(len, k);
    auto it = ordered_chains_.find(key);
    if (it != ordered_chains_.end()) return it->second;
    OpMatrix oc = l_hat(N(), mode()).embed_at(1, k);
    for (int r = 2; r <= len; ++r) {
        OpMatrix next = copy_overline(l_hat(N(), mode()), r, k, R_);
        oc = order_matrix_homogeneous(oc * next);
    }
    auto [sit, ok] = ordered_chains_.emplace(key, std::move(oc));
    (void)ok;
    return sit->second;
}

} // namespace recalc
