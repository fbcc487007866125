#ifndef RECALC_NC_POLY_HPP
#define RECALC_NC_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "recalc/sparse_mat.hpp"

namespace recalc {

// Free-algebra generators m_i^j and d_i^j (quantum derivatives), 1-based
// indices packed into 15 bits: kind | (i-1) | (j-1).
enum class GenKind : uint8_t { M = 0, Del = 1 };

using GenCode = uint16_t;

inline GenCode gen_code(GenKind kind, int i, int j) {
    if (i < 1 || j < 1 || i > 128 || j > 128)
        throw shape_error("generator index out of range");
    return GenCode((kind == GenKind::Del ? 0x4000 : 0) | ((i - 1) << 7) | (j - 1));
}

inline GenKind code_kind(GenCode g) { return (g & 0x4000) ? GenKind::Del : GenKind::M; }
inline int code_i(GenCode g) { return int((g >> 7) & 0x7f) + 1; }
inline int code_j(GenCode g) { return int(g & 0x7f) + 1; }

// Word in the free algebra; stored verbatim, never reordered implicitly.
using Word = std::vector<GenCode>;

struct BiDegree {
    int m = 0;
    int del = 0;
    bool operator==(const BiDegree&) const = default;
};

BiDegree word_bidegree(const Word& w);
std::string word_str(const Word& w);

// Noncommutative polynomial over Scalar in the generators {m_i^j, d_i^j}.
class NcPoly {
public:
    NcPoly() = default;
    static NcPoly constant(const Scalar& c);
    static NcPoly one(const QMode& m) { return constant(Scalar::one(m)); }
    static NcPoly gen(GenKind kind, int i, int j, const QMode& m);
    static NcPoly from_word(const Word& w, const Scalar& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Word& w, const Scalar& c);
    const Scalar* find(const Word& w) const;

    friend NcPoly operator+(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator-(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& o);
    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

    NcPoly scaled(const Scalar& c) const;

    int max_m_degree() const;
    int max_del_degree() const;
    // Nonzero homogeneous component of the given bidegree.
    NcPoly component(const BiDegree& d) const;
    std::vector<BiDegree> bidegrees() const;

    std::string str() const;

private:
    std::map<Word, Scalar> terms_;
};

inline NcPoly operator*(const NcPoly& p, const Scalar& c) { return p.scaled(c); }
inline NcPoly operator*(const Scalar& c, const NcPoly& p) { return p.scaled(c); }

template <>
struct RingTraits<NcPoly> {
    static NcPoly zero(const QMode&) { return NcPoly(); }
    static NcPoly one(const QMode& m) { return NcPoly::one(m); }
};

} // namespace recalc

#endif
