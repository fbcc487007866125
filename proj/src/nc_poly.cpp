#include "recalc/nc_poly.hpp"

#include <sstream>

namespace recalc {

BiDegree word_bidegree(const Word& w) {
    BiDegree d;
    for (GenCode g : w)
        (code_kind(g) == GenKind::M ? d.m : d.del) += 1;
    return d;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t t = 0; t < w.size(); ++t) {
        if (t) os << "*";
        os << (code_kind(w[t]) == GenKind::M ? "m" : "d");
        os << "[" << code_i(w[t]) << "," << code_j(w[t]) << "]";
    }
    return os.str();
}

NcPoly NcPoly::constant(const Scalar& c) {
    NcPoly p;
    if (!c.is_zero()) p.terms_.emplace(Word{}, c);
    return p;
}

NcPoly NcPoly::gen(GenKind kind, int i, int j, const QMode& m) {
    NcPoly p;
    p.terms_.emplace(Word{gen_code(kind, i, j)}, Scalar::one(m));
    return p;
}

NcPoly NcPoly::from_word(const Word& w, const Scalar& c) {
    NcPoly p;
    if (!c.is_zero()) p.terms_.emplace(w, c);
    return p;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Scalar* NcPoly::find(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? nullptr : &it->second;
}

NcPoly operator+(const NcPoly& a, const NcPoly& b) {
    NcPoly r = a;
    r += b;
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly operator-(const NcPoly& a, const NcPoly& b) { return a + (-b); }

NcPoly NcPoly::operator-() const {
    NcPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly r;
    for (auto& [wa, ca] : a.terms_)
        for (auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
    NcPoly r;
    if (c.is_zero()) return r;
    for (auto& [w, v] : terms_) {
        Scalar s = v * c;
        if (!s.is_zero()) r.terms_.emplace(w, std::move(s));
    }
    return r;
}

int NcPoly::max_m_degree() const {
    int d = 0;
    for (auto& [w, c] : terms_) d = std::max(d, word_bidegree(w).m);
    return d;
}

int NcPoly::max_del_degree() const {
    int d = 0;
    for (auto& [w, c] : terms_) d = std::max(d, word_bidegree(w).del);
    return d;
}

NcPoly NcPoly::component(const BiDegree& d) const {
    NcPoly r;
    for (auto& [w, c] : terms_)
        if (word_bidegree(w) == d) r.terms_.emplace(w, c);
    return r;
}

std::vector<BiDegree> NcPoly::bidegrees() const {
    std::vector<BiDegree> out;
    for (auto& [w, c] : terms_) {
        BiDegree d = word_bidegree(w);
        bool seen = false;
        for (auto& e : out)
            if (e == d) { seen = true; break; }
        if (!seen) out.push_back(d);
    }
    return out;
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (w.empty()) {
            os << "(" << c.str() << ")";
        } else if (c.is_one()) {
            os << word_str(w);
        } else {
            os << "(" << c.str() << ")*" << word_str(w);
        }
    }
    return os.str();
}

} // namespace recalc
