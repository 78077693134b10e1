#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace extcoh {

/// Element indices into a multiplication table.
using Elem = int;
using Perm = std::vector<int>;

enum class Fault {
    NotClosed,
    NotAssociative,
    NoIdentity,
    NoInverse,
    NotNormal,
    NotASubgroup,
    NotAHomomorphism,
    NotEquivariant,
    Violates3,
    Violates4,
    Violates5,
    NotNormalized,
    NotDescendable,
    BadSection,
    NotCentral,
    IncompatibleKernels,
    NotAbelian,
    NotStable,
    ImageEscapes,
    NotCharacteristicSeries,
    NotAbelianQuotient,
    BadInstance,
};

const char* fault_name(Fault f);

/// Validation failure carrying the offending indices (a witness pair,
/// triple, or element, depending on the fault).
class ValidationError : public std::runtime_error {
public:
    ValidationError(Fault fault, std::string message, std::vector<int> witness = {})
        : std::runtime_error(std::move(message)), fault(fault), witness(std::move(witness)) {}

    Fault fault;
    std::vector<int> witness;
};

/// Raised when an enumeration would exceed the configured bounds.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(std::string message) : std::runtime_error(std::move(message)) {}
};

/// A finite group as a validated multiplication table. Element indices run
/// from 0 to order-1; `table[x][y]` is the product x*y.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table;
    Elem identity = 0;
    std::vector<int> inverse;
    std::string label;

    Elem mul(Elem x, Elem y) const { return table[x][y]; }
    Elem inv(Elem x) const { return inverse[x]; }
    Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inverse[g]); }
    Elem power(Elem x, long long e) const;
    int elem_order(Elem x) const;
    bool is_abelian() const;
    int exponent() const;

    /// 64-bit content digest of (order, table, label-free data); used for
    /// memoization and stable identifiers.
    std::uint64_t digest() const;
};

/// A homomorphism between validated groups, stored as the image of every
/// source element.
struct GroupHom {
    const FiniteGroup* source = nullptr;
    const FiniteGroup* target = nullptr;
    std::vector<int> map;

    Elem operator()(Elem x) const { return map[x]; }
};

/// An automorphism is a permutation of element indices; composition and
/// comparison work directly on the permutation arrays.
struct Automorphism {
    const FiniteGroup* group = nullptr;
    Perm map;

    Elem operator()(Elem x) const { return map[x]; }
};

/// A subgroup stored as a sorted list of parent indices together with its
/// own table and the embedding hom.
struct Subgroup {
    std::vector<int> elems;   // sorted parent element indices
    FiniteGroup group;        // the subgroup's own table
    GroupHom embed;           // group -> parent; embed.map == elems

    bool contains(Elem parent_elem) const;
    /// Index in `group` of a parent element; throws if not a member.
    int index_of(Elem parent_elem) const;
};

/// Aut(G) with Inn(G) marked and Out(G) = Aut/Inn as an explicit quotient.
/// autElems is sorted lexicographically on the permutation arrays, so all
/// derived data is reproducible.
struct AutTower {
    FiniteGroup autGroup;                 // composition table of Aut(G)
    std::vector<Automorphism> autElems;   // canonical order
    std::vector<int> innIndices;          // sorted; Inn(G) inside autGroup
    FiniteGroup outGroup;                 // Aut/Inn
    std::vector<int> cosetOf;             // autGroup elem -> outGroup elem

    int index_of(const Perm& p) const;    // -1 if absent
    int compose(int a, int b) const { return autGroup.table[a][b]; }
    int inverse_of(int a) const { return autGroup.inverse[a]; }
    bool is_inner(int a) const;
    /// Lexicographically smallest automorphism in the coset of `out_elem`.
    int canonical_lift(int out_elem) const;
};

// -- construction and validation ------------------------------------------

FiniteGroup validate_group_table(const std::vector<std::vector<int>>& table,
                                 std::string label = "");

/// Full Aut/Inn/Out tower. Falls back to a full bijection scan below order
/// 8, otherwise backtracks over generator images. Results are memoized by
/// table digest.
const AutTower& automorphism_tower(const FiniteGroup& G, int max_order = 16);

Subgroup center(const FiniteGroup& G);

struct Quotient {
    FiniteGroup group;
    GroupHom projection;           // parent -> group
    std::vector<int> cosetRep;     // quotient elem -> smallest parent index
};

Quotient quotient_by_normal(const FiniteGroup& G, const Subgroup& N);

struct SemidirectProduct {
    FiniteGroup group;       // pairs (n,q), index q*|N|+n
    GroupHom embedN;
    GroupHom embedQ;
    GroupHom projQ;
    int pair_index(Elem n, Elem q) const;
    std::pair<Elem, Elem> unpair(Elem x) const;

    int nOrder = 0;
    int qOrder = 0;
};

/// act maps Q-elements to indices into automorphism_tower(N).autElems.
SemidirectProduct semidirect_product(const FiniteGroup& N, const FiniteGroup& Q,
                                     const std::vector<int>& act);

// -- subgroup utilities -----------------------------------------------------

/// Subgroup generated by `gens`, as a sorted-element Subgroup.
Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens);

/// Subgroup on an explicit, already closed element set; validates closure.
Subgroup subgroup_from_elements(const FiniteGroup& G, std::vector<int> elems);

bool is_normal(const FiniteGroup& G, const Subgroup& N, std::vector<int>* witness = nullptr);

/// Pointwise check that `map` defines a homomorphism source -> target.
bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     const std::vector<int>& map);

GroupHom make_hom(const FiniteGroup& source, const FiniteGroup& target,
                  std::vector<int> map);

/// Brute-force table isomorphism via generator-image backtracking.
std::optional<Perm> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B);

/// A minimal-size generating set, chosen deterministically.
std::vector<int> minimal_generating_set(const FiniteGroup& G);

// -- standard small groups --------------------------------------------------

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);
FiniteGroup klein_group();
FiniteGroup symmetric3();
FiniteGroup dihedral_group(int n);   // order 2n
FiniteGroup quaternion8();

// -- misc -------------------------------------------------------------------

std::uint64_t fnv1a64(const void* data, size_t len);
std::uint64_t fnv1a64_ints(const std::vector<int>& v, std::uint64_t seed = 1469598103934665603ull);
std::string digest_hex(std::uint64_t d);

}  // namespace extcoh
