#pragma once

#include "extcoh/groups.hpp"

#include <map>
#include <vector>

namespace extcoh {

/// Invariant-factor decomposition of a finite abelian group: basis elements
/// b_i with orders d_1 | d_2 | ... and coordinate maps both ways.
struct AbelianBasis {
    const FiniteGroup* A = nullptr;
    std::vector<int> basis;                    // one element index per factor
    std::vector<int> moduli;                   // d_i, each > 1 (trivial group: empty)
    std::vector<std::vector<int>> coords;      // element -> coordinate tuple
    std::map<std::vector<int>, int> elemOf;    // coordinate tuple -> element

    int rank() const { return static_cast<int>(moduli.size()); }
    int elem(const std::vector<int>& c) const;
};

AbelianBasis abelian_basis(const FiniteGroup& A);

/// An action of Q on an abelian module A by automorphisms, stored as one
/// permutation of A per Q element.
struct ModuleAction {
    const FiniteGroup* A = nullptr;
    const FiniteGroup* Q = nullptr;
    std::vector<Perm> perm;  // perm[q][a]

    int act(int q, int a) const { return perm[q][a]; }
};

ModuleAction trivial_action(const FiniteGroup& A, const FiniteGroup& Q);

/// Subgroup of ⊕_j Z/moduli[j] kept in row-echelon form over the integers
/// (the moduli relations are folded in). reduce() returns the
/// lexicographically least representative of a coset, which doubles as a
/// membership test and a canonical form.
struct Echelon {
    std::vector<int> moduli;
    std::vector<std::vector<long long>> rows;  // echelon rows, pivots ascending
    std::vector<int> pivcol;
    std::vector<long long> step;               // rows[i][pivcol[i]]

    static Echelon build(std::vector<int> moduli,
                         const std::vector<std::vector<long long>>& generators);

    std::vector<long long> reduce(std::vector<long long> v) const;
    bool contains(const std::vector<long long>& v) const;
    /// Order of the subgroup inside ⊕ Z/moduli.
    long long subgroup_size() const;
};

/// Smith normal form of an integer matrix; returns the diagonal entries and
/// (optionally) the row transform U with U*M*V = D.
struct SmithResult {
    std::vector<long long> diag;                       // nonnegative, d_i | d_{i+1}
    std::vector<std::vector<long long>> rowTransform;  // U, square rows x rows
};

SmithResult smith_normal_form(std::vector<std::vector<long long>> M, bool want_row_transform);

/// Cohomology of a finite group Q with coefficients in an abelian module,
/// computed from the normalized bar resolution by integer linear algebra.
struct AbelianCohGroup {
    int degree = 0;
    std::vector<int> invariants;               // s_i > 1
    long long size = 1;
    int exponent = 1;
    /// Class representatives as normalized cochains: degree-1 reps have one
    /// module element per nonidentity q; degree-2 reps one per ordered pair.
    std::vector<std::vector<int>> reps;
    FiniteGroup addTable;

    /// Identify the class of a cocycle given as a normalized cochain.
    int class_of(const std::vector<int>& cochain) const;

    // internal: canonical-form lookup
    std::vector<int> cochainModuli;             // coordinates of the cochain space
    AbelianBasis basisA;
    Echelon coboundaries;
    std::map<std::vector<long long>, int> canonIndex;
    const FiniteGroup* Q = nullptr;

    std::vector<long long> to_coords(const std::vector<int>& cochain) const;
    std::vector<int> from_coords(const std::vector<long long>& v) const;
};

/// degree must be 1 or 2. Throws NotAbelian / SizeLimitError.
AbelianCohGroup abelian_cohomology(int degree, const FiniteGroup& Q, const ModuleAction& action,
                                   long long class_limit = 1 << 20);

}  // namespace extcoh
