#include "recalc/hecke_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace recalc {

// --- partitions --------------------------------------------------------------

int Partition::weight() const {
    int w = 0;
    for (int p : parts) w += p;
    return w;
}

bool Partition::valid() const {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    Partition p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw parse_error("bad partition: " + text);
        p.parts.push_back(std::stoi(item));
    }
    if (!p.valid()) throw parse_error("not weakly decreasing: " + text);
    return p;
}

namespace {
void partitions_rec(int n, int maxpart, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition{acc});
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}
} // namespace

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n, acc, out);
    return out;
}

// --- standard tableaux --------------------------------------------------------

bool StdTableau::valid() const {
    if (int(rows.size()) != shape.rows()) return false;
    int n = shape.weight();
    std::vector<bool> seen(size_t(n) + 1, false);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (int(rows[r].size()) != shape.parts[r]) return false;
        for (size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            if (v < 1 || v > n || seen[size_t(v)]) return false;
            seen[size_t(v)] = true;
            if (c > 0 && rows[r][c - 1] >= v) return false;
            if (r > 0 && rows[r - 1][c] >= v) return false;
        }
    }
    return true;
}

int StdTableau::content(int s) const {
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] == s) return int(c) - int(r);
    throw shape_error("entry not present in tableau");
}

std::string StdTableau::str() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) os << ";";
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c) os << ",";
            os << rows[r][c];
        }
    }
    return os.str();
}

StdTableau StdTableau::parse(const std::string& text) {
    StdTableau t;
    std::stringstream ss(text);
    std::string rowtext;
    while (std::getline(ss, rowtext, ';')) {
        std::vector<int> row;
        std::stringstream rs(rowtext);
        std::string item;
        while (std::getline(rs, item, ',')) {
            if (item.empty()) throw parse_error("bad tableau: " + text);
            row.push_back(std::stoi(item));
        }
        if (row.empty()) throw parse_error("bad tableau: " + text);
        t.shape.parts.push_back(int(row.size()));
        t.rows.push_back(std::move(row));
    }
    if (!t.shape.valid() || !t.valid()) throw parse_error("invalid tableau: " + text);
    return t;
}

StdTableau StdTableau::without_largest() const {
    int n = shape.weight();
    StdTableau t = *this;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (!t.rows[r].empty() && t.rows[r].back() == n) {
            t.rows[r].pop_back();
            t.shape.parts[r] -= 1;
            if (t.rows[r].empty()) {
                t.rows.erase(t.rows.begin() + long(r));
                t.shape.parts.erase(t.shape.parts.begin() + long(r));
            }
            return t;
        }
    }
    throw shape_error("largest entry is not at a removable corner");
}

std::vector<StdTableau> standard_tableaux(const Partition& shape) {
    if (!shape.valid()) throw shape_error("invalid partition");
    int n = shape.weight();
    if (n == 0) return {StdTableau{}};
    std::vector<StdTableau> out;
    for (size_t r = 0; r < shape.parts.size(); ++r) {
        bool removable = (r + 1 == shape.parts.size()) || shape.parts[r] > shape.parts[r + 1];
        if (!removable) continue;
        Partition sub = shape;
        sub.parts[r] -= 1;
        if (sub.parts[r] == 0) sub.parts.erase(sub.parts.begin() + long(r));
        for (StdTableau t : standard_tableaux(sub)) {
            if (size_t(r) == t.rows.size()) {
                t.rows.push_back({n});
                t.shape.parts.push_back(1);
            } else {
                t.rows[r].push_back(n);
                t.shape.parts[r] += 1;
            }
            out.push_back(std::move(t));
        }
    }
    return out;
}

// --- permutations --------------------------------------------------------------

Perm perm_id(int n) {
    Perm w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[size_t(i)] = i + 1;
    return w;
}

int perm_length(const Perm& w) {
    int len = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++len;
    return len;
}

std::vector<Perm> symmetric_group(int n) {
    Perm w = perm_id(n);
    std::vector<Perm> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<int> reduced_word(Perm w) {
    // w = w' s_i with l(w') = l(w) - 1 gives word(w) = word(w') ++ [i]
    std::vector<int> acc;
    for (;;) {
        int descent = 0;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                descent = int(i) + 1;
                break;
            }
        if (descent == 0) break;
        acc.insert(acc.begin(), descent);
        std::swap(w[size_t(descent - 1)], w[size_t(descent)]);
    }
    return acc;
}

// --- Hecke elements -------------------------------------------------------------

HeckeElement HeckeElement::unit(int n, const QMode& mode) {
    HeckeElement e(n, mode);
    e.add_term(perm_id(n), Scalar::one(mode));
    return e;
}

HeckeElement HeckeElement::generator(int i, int n, const QMode& mode) {
    if (i < 1 || i >= n) throw shape_error("generator index out of range");
    HeckeElement e(n, mode);
    Perm w = perm_id(n);
    std::swap(w[size_t(i - 1)], w[size_t(i)]);
    e.add_term(w, Scalar::one(mode));
    return e;
}

void HeckeElement::add_term(const Perm& w, const Scalar& c) {
    if (int(w.size()) != n_) throw shape_error("permutation degree mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    if (a.n_ != b.n_) throw shape_error("Hecke degree mismatch");
    a.mode_.require_same(b.mode_);
    HeckeElement r = a;
    for (auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
    return a + (-b);
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

HeckeElement HeckeElement::scaled(const Scalar& c) const {
    HeckeElement r(n_, mode_);
    if (c.is_zero()) return r;
    for (auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
    return r;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
    if (n_ != o.n_) throw shape_error("Hecke degree mismatch");
    return terms_ == o.terms_;
}

HeckeElement HeckeElement::promoted(int m) const {
    if (m < n_) throw shape_error("cannot lower the Hecke degree");
    HeckeElement r(m, mode_);
    for (auto& [w, c] : terms_) {
        Perm v = w;
        for (int t = n_ + 1; t <= m; ++t) v.push_back(t);
        r.terms_.emplace(std::move(v), c);
    }
    return r;
}

std::string HeckeElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*T[";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << " ";
            os << w[i];
        }
        os << "]";
    }
    return os.str();
}

namespace {

// a * tau_i in the T_w basis:
//   T_w tau_i = T_{w s_i}                    when l grows
//   T_w tau_i = T_{w s_i} + (q - q^-1) T_w   when l drops
HeckeElement right_mul_gen(const HeckeElement& a, int i) {
    HeckeElement out(a.degree(), a.mode());
    Scalar gap = Scalar::q(a.mode()) - Scalar::q_power(-1, a.mode());
    for (auto& [w, c] : a.terms()) {
        Perm ws = w;
        std::swap(ws[size_t(i - 1)], ws[size_t(i)]);
        out.add_term(ws, c);
        if (w[size_t(i - 1)] > w[size_t(i)]) out.add_term(w, c * gap);
    }
    return out;
}

} // namespace

namespace {

// a * T_w, memoized along the weak right order within one product call.
const HeckeElement& product_by_word(const HeckeElement& a, const Perm& w,
                                    std::map<Perm, HeckeElement>& cache) {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    int descent = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) {
            descent = int(i) + 1;
            break;
        }
    if (descent == 0) return cache.emplace(w, a).first->second;
    Perm wp = w;
    std::swap(wp[size_t(descent - 1)], wp[size_t(descent)]);
    const HeckeElement& prev = product_by_word(a, wp, cache);
    return cache.emplace(w, right_mul_gen(prev, descent)).first->second;
}

} // namespace

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
    if (a.degree() != b.degree()) throw shape_error("Hecke degree mismatch");
    a.mode().require_same(b.mode());
    HeckeElement out(a.degree(), a.mode());
    std::map<Perm, HeckeElement> cache;
    for (auto& [wb, cb] : b.terms()) {
        const HeckeElement& awb = product_by_word(a, wb, cache);
        for (auto& [w, c] : awb.terms()) out.add_term(w, c * cb);
    }
    return out;
}

HeckeElement jm_element(int r, int n, const QMode& mode) {
    if (r < 1 || r > n) throw shape_error("Jucys-Murphy index out of range");
    HeckeElement j = HeckeElement::unit(n, mode);
    for (int s = 2; s <= r; ++s) {
        HeckeElement t = HeckeElement::generator(s - 1, n, mode);
        j = hecke_mul(hecke_mul(t, j), t);
    }
    return j;
}

HeckeElement coxeter_element(int k, const QMode& mode) {
    HeckeElement e = HeckeElement::unit(k, mode);
    for (int i = k - 1; i >= 1; --i)
        e = hecke_mul(e, HeckeElement::generator(i, k, mode));
    return e;
}

namespace {

// Contents of the addable corners of a partition.
std::vector<int> addable_corner_contents(const Partition& shape) {
    std::vector<int> out;
    out.push_back(shape.parts.empty() ? 0 : shape.parts[0]);    // row 1, col p1+1
    for (size_t r = 1; r < shape.parts.size(); ++r)
        if (shape.parts[r] < shape.parts[r - 1])
            out.push_back(shape.parts[r] - int(r));
    if (!shape.parts.empty()) out.push_back(-int(shape.parts.size()));  // new row
    return out;
}

std::mutex idem_mutex;
std::map<std::string, HeckeElement> idem_cache;

} // namespace

HeckeElement primitive_idempotent(const Partition& lambda, const StdTableau& T,
                                  const QMode& mode) {
    if (!lambda.valid() || !T.valid() || !(T.shape == lambda))
        throw shape_error("tableau does not match the partition");
    int n = lambda.weight();
    if (n == 1) return HeckeElement::unit(1, mode);

    std::string key = mode.key() + "|" + lambda.str() + "|" + T.str();
    {
        std::lock_guard<std::mutex> lock(idem_mutex);
        auto it = idem_cache.find(key);
        if (it != idem_cache.end()) return it->second;
    }

    StdTableau Tp = T.without_largest();
    HeckeElement E = primitive_idempotent(Tp.shape, Tp, mode).promoted(n);
    HeckeElement jn = jm_element(n, n, mode);
    int cn = T.content(n);
    for (int c : addable_corner_contents(Tp.shape)) {
        if (c == cn) continue;
        Scalar den = Scalar::q_power(2 * cn, mode) - Scalar::q_power(2 * c, mode);
        if (den.is_zero())
            throw guard_error("idempotent interpolation degenerates: q^" +
                              std::to_string(2 * cn) + " = q^" + std::to_string(2 * c) +
                              " at this specialization");
        HeckeElement factor = jn - HeckeElement::unit(n, mode).scaled(Scalar::q_power(2 * c, mode));
        E = hecke_mul(E, factor).scaled(den.inverse());
    }

    std::lock_guard<std::mutex> lock(idem_mutex);
    idem_cache.emplace(key, E);
    return E;
}

TensorOp rho_r(const HeckeElement& z, const TensorOp& R, int k) {
    if (z.degree() > k) throw shape_error("element degree exceeds the site count");
    TensorOp out(R.dim(), k, R.mode());
    for (auto& [w, c] : z.terms()) {
        TensorOp img = TensorOp::identity(R.dim(), k, R.mode());
        for (int i : reduced_word(w)) img = img * R.embed_at(i, k);
        out = out + img.scaled(c);
    }
    return out;
}

} // namespace recalc
