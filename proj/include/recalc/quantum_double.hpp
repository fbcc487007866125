#ifndef RECALC_QUANTUM_DOUBLE_HPP
#define RECALC_QUANTUM_DOUBLE_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <unordered_map>

#include "recalc/op_matrix.hpp"

namespace recalc {

// Degree caps for the graded decision procedures; the quotient-basis row
// reduction is the cost center, and these bounds keep it desk-scale.
struct Caps {
    int max_m_degree = 4;
    int max_del_degree = 4;

    static Caps defaults_for(int N) {
        Caps c;
        if (N >= 3) c.max_del_degree = 3;
        return c;
    }
};

// First non-vanishing coordinate (or entry) reported by a failed check.
struct Witness {
    std::string where;   // "" or "entry (r,c)"
    std::string what;    // reduced word and coefficient
    std::string str() const { return where.empty() ? what : where + ": " + what; }
};

// Polynomial with every derivative placed right of every coordinate;
// produced by the reordering procedures.
struct SplitForm {
    NcPoly poly;
};

enum class Scope { MGens, DGens, LGens };

// Degree-d quotient data of the free algebra on one generator family by the
// two-sided ideal of its quadratic relations.
struct QuotientInfo {
    int degree = 0;
    int dim = 0;
    bool matches_classical = true;      // dim == binom(N^2 + d - 1, d)
    std::vector<Word> basis_reps;
};

// The quantum double of the derivative and coordinate algebras attached to a
// skew-invertible Hecke symmetry: generator-level exchange tables, split
// normal forms, the counit action, and exact graded ideal-membership
// equality.  Caches are internally synchronized; all public operations are
// safe to call concurrently.
class QuantumDouble {
public:
    explicit QuantumDouble(TensorOp R, std::optional<Caps> caps = std::nullopt);
    ~QuantumDouble();
    QuantumDouble(const QuantumDouble&) = delete;
    QuantumDouble& operator=(const QuantumDouble&) = delete;

    const TensorOp& R() const { return R_; }
    const TensorOp& Rinv() const { return Rinv_; }
    const SkewData& skew() const { return skew_; }
    const TensorOp& C() const { return skew_.c; }
    int N() const { return R_.dim(); }
    const QMode& mode() const { return R_.mode(); }
    const Caps& caps() const { return caps_; }

    // --- reordering to split form ------------------------------------------

    // Moves every derivative right of every coordinate using the full
    // exchange relations (bidegree-preserving terms plus contraction terms).
    SplitForm reorder_normal(const NcPoly& p) const;

    // Same, using only the homogeneous part of the exchange relations; this
    // realizes the normal-ordering operation : ... :.
    SplitForm order_homogeneous(const NcPoly& p) const;

    static bool word_is_split(const Word& w);

    // Keeps the derivative-degree-0 part of a split form.
    static NcPoly counit_project(const SplitForm& s);

    // X acting on a coordinate-only polynomial f through exchange-then-counit.
    NcPoly act(const NcPoly& X, const NcPoly& f) const;

    // Entrywise action of a matrix of operators on a matrix of coordinates.
    OpMatrix act_matrix(const OpMatrix& X, const OpMatrix& F) const;

    OpMatrix reorder_matrix(const OpMatrix& X) const;
    OpMatrix order_matrix_homogeneous(const OpMatrix& X) const;

    // --- graded quotients and equality --------------------------------------

    QuotientInfo quotient_info(GenKind tag, int degree) const;

    // Exact equality in the double, decided by reducing the split difference
    // through the coordinate- and derivative-side quotient bases.
    bool alg_equal(const NcPoly& a, const NcPoly& b, Witness* w = nullptr) const;
    bool matrix_equal(const OpMatrix& A, const OpMatrix& B, Witness* w = nullptr) const;

    // Commutation with every generator of the chosen family.
    bool is_central(const NcPoly& p, Scope scope, Witness* w = nullptr) const;

    // Membership of a coordinate-only polynomial in the characteristic
    // span, degree by degree.
    bool char_membership(const NcPoly& f, Witness* w = nullptr) const;

    // Exact coefficients expressing target in span(gens); empty when target
    // lies outside the span.
    std::optional<std::vector<Scalar>> solve_in_span(const NcPoly& target,
                                                     const std::vector<NcPoly>& gens) const;

    // Generators as polynomials: m_i^j, d_i^j, or lhat_i^j.
    NcPoly generator_poly(Scope scope, int i, int j) const;

    // Ordered product chain of the Euler operators, computed incrementally
    // through the homogeneous reordering; cached per length.
    const OpMatrix& ordered_l_chain(int len, int k) const;

private:
    struct QB;                                  // quotient data per degree

    void build_tables() const;
    const QB& quotient(GenKind tag, int degree) const;
    std::vector<std::pair<int, Scalar>> word_coords(GenKind tag, const Word& w) const;
    NcPoly rewrite(const NcPoly& p, bool homogeneous) const;

    // reduced coordinates of a split poly: key packs (mdeg, ddeg, mi, di)
    using CoordKey = std::tuple<int, int, int, int>;
    std::map<CoordKey, Scalar> split_coords(const SplitForm& s) const;
    std::string coord_key_str(const CoordKey& k) const;

    struct CharSpan;
    const CharSpan& char_span(int degree) const;

    TensorOp R_;
    TensorOp Rinv_;
    SkewData skew_;
    Caps caps_;

    mutable std::recursive_mutex mu_;
    mutable bool tables_built_ = false;
    mutable std::map<std::pair<GenCode, GenCode>, NcPoly> full_table_;
    mutable std::map<std::pair<GenCode, GenCode>, NcPoly> hom_table_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<QB>> quotients_;
    mutable std::map<int, std::unique_ptr<CharSpan>> char_spans_;
    mutable std::map<std::pair<int, int>, OpMatrix> ordered_chains_;
};

} // namespace recalc

#endif
