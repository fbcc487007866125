#ifndef RECALC_SPARSE_MAT_HPP
#define RECALC_SPARSE_MAT_HPP

#include <cstdint>
#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include "recalc/scalar.hpp"

namespace recalc {

template <class Ring>
struct RingTraits;

template <>
struct RingTraits<Scalar> {
    static Scalar zero(const QMode& m) { return Scalar::zero(m); }
    static Scalar one(const QMode& m) { return Scalar::one(m); }
};

// Maximum allowed side length N^k of an operator on k sites; the default
// keeps desk-scale runs bounded and can be raised via RECALC_CAP_SITES.
inline long site_dimension_cap() {
    static long cap = [] {
        if (const char* env = std::getenv("RECALC_CAP_SITES")) {
            long v = std::atol(env);
            if (v > 0) return v;
        }
        return 4096L;
    }();
    return cap;
}

inline uint32_t checked_side(int dim, int sites) {
    if (dim < 1) throw shape_error("dimension must be positive");
    if (sites < 0) throw shape_error("negative site count");
    long side = 1;
    for (int t = 0; t < sites; ++t) {
        side *= dim;
        if (side > site_dimension_cap())
            throw guard_error("dimension guard exceeded: " + std::to_string(dim) + "^" +
                              std::to_string(sites) + " > " +
                              std::to_string(site_dimension_cap()) +
                              " (raise RECALC_CAP_SITES to override)");
    }
    return uint32_t(side);
}

// Sparse square matrix over a ring, acting on (C^dim)^{tensor sites}.
// Entries are stored row-major with no explicit zeros.  Basis convention:
// x_{i1} (x) ... (x) x_{ik}  ->  sum_t (i_t - 1) * dim^(k - t), so site 1 is
// the most significant digit, matching the file format N*(i-1)+(j-1).
template <class Ring>
class SparseMat {
public:
    using Key = std::pair<uint32_t, uint32_t>;
    using Map = std::map<Key, Ring>;

    SparseMat(int dim, int sites, QMode mode)
        : dim_(dim), sites_(sites), side_(checked_side(dim, sites)), mode_(std::move(mode)) {}

    static SparseMat identity(int dim, int sites, const QMode& mode) {
        SparseMat m(dim, sites, mode);
        for (uint32_t i = 0; i < m.side_; ++i)
            m.e_.emplace(Key{i, i}, RingTraits<Ring>::one(mode));
        return m;
    }

    int dim() const { return dim_; }
    int sites() const { return sites_; }
    uint32_t side() const { return side_; }
    const QMode& mode() const { return mode_; }
    const Map& entries() const { return e_; }
    size_t nnz() const { return e_.size(); }
    bool is_zero() const { return e_.empty(); }

    void set(uint32_t r, uint32_t c, Ring v) {
        if (r >= side_ || c >= side_) throw shape_error("entry index out of range");
        if (v.is_zero())
            e_.erase(Key{r, c});
        else
            e_.insert_or_assign(Key{r, c}, std::move(v));
    }

    void add_to(uint32_t r, uint32_t c, const Ring& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = e_.try_emplace(Key{r, c}, v);
        if (!fresh) {
            it->second = it->second + v;
            if (it->second.is_zero()) e_.erase(it);
        }
    }

    const Ring* find(uint32_t r, uint32_t c) const {
        auto it = e_.find(Key{r, c});
        return it == e_.end() ? nullptr : &it->second;
    }

    Ring get(uint32_t r, uint32_t c) const {
        const Ring* p = find(r, c);
        return p ? *p : RingTraits<Ring>::zero(mode_);
    }

    bool operator==(const SparseMat& o) const {
        require_same_shape(o);
        return e_ == o.e_;
    }

    void require_same_shape(const SparseMat& o) const {
        if (dim_ != o.dim_ || sites_ != o.sites_)
            throw shape_error("operator shape mismatch");
        mode_.require_same(o.mode_);
    }

    SparseMat operator-() const {
        SparseMat r = *this;
        for (auto& [k, v] : r.e_) v = -v;
        return r;
    }

    friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
        a.require_same_shape(b);
        SparseMat r = a;
        for (auto& [k, v] : b.e_) r.add_to(k.first, k.second, v);
        return r;
    }

    friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
        return a + (-b);
    }

    // Kronecker embedding at 1-based site position: I^(pos-1) (x) X (x) I^(rest).
    SparseMat embed_at(int pos, int ktotal) const {
        if (pos < 1 || pos + sites_ - 1 > ktotal)
            throw shape_error("embedding position out of range");
        SparseMat out(dim_, ktotal, mode_);
        int rest = ktotal - sites_;
        uint32_t free_count = checked_side(dim_, rest);
        // strides: digits [1..pos-1], X digits [pos..pos+s-1], digits after
        long tail_len = ktotal - (pos + sites_ - 1);
        long tail_side = 1;
        for (int t = 0; t < tail_len; ++t) tail_side *= dim_;
        long mid_side = side_;
        for (auto& [k, v] : e_) {
            for (uint32_t f = 0; f < free_count; ++f) {
                // split the free digits into head (before X) and tail (after)
                long head = f / tail_side;
                long tail = f % tail_side;
                long row = (head * mid_side + k.first) * tail_side + tail;
                long col = (head * mid_side + k.second) * tail_side + tail;
                out.e_.emplace(Key{uint32_t(row), uint32_t(col)}, v);
            }
        }
        return out;
    }

    // Partial trace over the given 1-based sites (no quantum-trace weights).
    SparseMat partial_trace(const std::vector<int>& sites_to_trace) const {
        std::vector<bool> traced(size_t(sites_) + 1, false);
        for (int s : sites_to_trace) {
            if (s < 1 || s > sites_) throw shape_error("trace site out of range");
            if (traced[size_t(s)]) throw shape_error("duplicate trace site");
            traced[size_t(s)] = true;
        }
        int out_sites = sites_ - int(sites_to_trace.size());
        SparseMat out(dim_, out_sites, mode_);
        std::vector<uint32_t> rd(static_cast<size_t>(sites_));
        std::vector<uint32_t> cd(static_cast<size_t>(sites_));
        for (auto& [k, v] : e_) {
            digits(k.first, rd);
            digits(k.second, cd);
            bool diag = true;
            for (int s = 1; s <= sites_ && diag; ++s)
                if (traced[size_t(s)] && rd[size_t(s - 1)] != cd[size_t(s - 1)]) diag = false;
            if (!diag) continue;
            uint32_t r = 0, c = 0;
            for (int s = 1; s <= sites_; ++s) {
                if (traced[size_t(s)]) continue;
                r = r * uint32_t(dim_) + rd[size_t(s - 1)];
                c = c * uint32_t(dim_) + cd[size_t(s - 1)];
            }
            out.add_to(r, c, v);
        }
        return out;
    }

    void digits(uint32_t index, std::vector<uint32_t>& out) const {
        for (int t = sites_ - 1; t >= 0; --t) {
            out[size_t(t)] = index % uint32_t(dim_);
            index /= uint32_t(dim_);
        }
    }

    template <class R2>
    auto scaled(const R2& s) const {
        using RingOut = std::decay_t<decltype(std::declval<Ring>() * std::declval<R2>())>;
        SparseMat<RingOut> r(dim_, sites_, mode_);
        if (s.is_zero()) return r;
        for (auto& [k, v] : e_) {
            RingOut w = v * s;
            if (!w.is_zero()) r.raw().emplace(k, std::move(w));
        }
        return r;
    }

    Map& raw() { return e_; }

private:
    int dim_;
    int sites_;
    uint32_t side_;
    QMode mode_;
    Map e_;
};

template <class R1, class R2>
void require_same_shape(const SparseMat<R1>& a, const SparseMat<R2>& b) {
    if (a.dim() != b.dim() || a.sites() != b.sites())
        throw shape_error("operator shape mismatch");
    a.mode().require_same(b.mode());
}

template <class R1, class R2>
auto operator*(const SparseMat<R1>& a, const SparseMat<R2>& b) {
    require_same_shape(a, b);
    using RingOut = std::decay_t<decltype(std::declval<R1>() * std::declval<R2>())>;
    SparseMat<RingOut> out(a.dim(), a.sites(), a.mode());
    const auto& be = b.entries();
    for (auto& [ka, va] : a.entries()) {
        auto it = be.lower_bound({ka.second, 0});
        auto end = be.lower_bound({ka.second + 1, 0});
        for (; it != end; ++it) {
            out.add_to(ka.first, it->first.second, va * it->second);
        }
    }
    return out;
}

} // namespace recalc

#endif
