#ifndef RECALC_HECKE_ALGEBRA_HPP
#define RECALC_HECKE_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "recalc/hecke_symmetry.hpp"

namespace recalc {

// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    int weight() const;
    int rows() const { return int(parts.size()); }
    bool valid() const;
    std::string str() const;                      // "2,1"
    static Partition parse(const std::string&);
    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

std::vector<Partition> all_partitions(int n);

// Standard Young tableau: rows and columns strictly increasing, entries
// 1..n bijectively.
struct StdTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    bool valid() const;
    // content of the cell holding s: column - row (1-based difference)
    int content(int s) const;
    std::string str() const;                      // "1,2;3"
    static StdTableau parse(const std::string&);
    StdTableau without_largest() const;           // removes the cell of n
    bool operator==(const StdTableau&) const = default;
};

std::vector<StdTableau> standard_tableaux(const Partition& shape);

// Permutations in one-line notation, 1-based values.
using Perm = std::vector<int>;

Perm perm_id(int n);
int perm_length(const Perm& w);                   // inversion count
std::vector<Perm> symmetric_group(int n);
std::vector<int> reduced_word(Perm w);            // generator indices, left to right

// Element of H_n(q) in the T_w basis over reduced words.
class HeckeElement {
public:
    HeckeElement(int n, QMode mode) : n_(n), mode_(std::move(mode)) {}
    static HeckeElement unit(int n, const QMode& mode);
    static HeckeElement generator(int i, int n, const QMode& mode);   // tau_i

    int degree() const { return n_; }
    const QMode& mode() const { return mode_; }
    const std::map<Perm, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Perm& w, const Scalar& c);

    friend HeckeElement operator+(const HeckeElement&, const HeckeElement&);
    friend HeckeElement operator-(const HeckeElement&, const HeckeElement&);
    HeckeElement operator-() const;
    HeckeElement scaled(const Scalar& c) const;
    bool operator==(const HeckeElement& o) const;

    // Raise the degree: S_n embeds into S_m fixing the new points.
    HeckeElement promoted(int m) const;

    std::string str() const;

private:
    int n_;
    QMode mode_;
    std::map<Perm, Scalar> terms_;
};

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

// Jucys-Murphy element j_r in H_n(q): j_1 = 1, j_r = tau_{r-1} j_{r-1} tau_{r-1}.
HeckeElement jm_element(int r, int n, const QMode& mode);

// tau_{k-1} tau_{k-2} ... tau_1 (the unit for k = 1).
HeckeElement coxeter_element(int k, const QMode& mode);

// Seminormal primitive idempotent for the standard tableau T of shape lambda,
// built down the tableau chain by Jucys-Murphy interpolation; memoized.
// Throws guard_error when a root-of-unity specialization degenerates the
// interpolation denominators.
HeckeElement primitive_idempotent(const Partition& lambda, const StdTableau& T,
                                  const QMode& mode);

// R-matrix representation on k sites: tau_i -> R_i.
TensorOp rho_r(const HeckeElement& z, const TensorOp& R, int k);

} // namespace recalc

#endif
