#include "extcoh/groups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace extcoh {

const char* fault_name(Fault f) {
    switch (f) {
        case Fault::NotClosed: return "NotClosed";
        case Fault::NotAssociative: return "NotAssociative";
        case Fault::NoIdentity: return "NoIdentity";
        case Fault::NoInverse: return "NoInverse";
        case Fault::NotNormal: return "NotNormal";
        case Fault::NotASubgroup: return "NotASubgroup";
        case Fault::NotAHomomorphism: return "NotAHomomorphism";
        case Fault::NotEquivariant: return "NotEquivariant";
        case Fault::Violates3: return "Violates3";
        case Fault::Violates4: return "Violates4";
        case Fault::Violates5: return "Violates5";
        case Fault::NotNormalized: return "NotNormalized";
        case Fault::NotDescendable: return "NotDescendable";
        case Fault::BadSection: return "BadSection";
        case Fault::NotCentral: return "NotCentral";
        case Fault::IncompatibleKernels: return "IncompatibleKernels";
        case Fault::NotAbelian: return "NotAbelian";
        case Fault::NotStable: return "NotStable";
        case Fault::ImageEscapes: return "ImageEscapes";
        case Fault::NotCharacteristicSeries: return "NotCharacteristicSeries";
        case Fault::NotAbelianQuotient: return "NotAbelianQuotient";
        case Fault::BadInstance: return "BadInstance";
    }
    return "Unknown";
}

std::uint64_t fnv1a64(const void* data, size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t fnv1a64_ints(const std::vector<int>& v, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (int x : v) {
        for (int b = 0; b < 4; ++b) {
            h ^= static_cast<unsigned char>((static_cast<unsigned>(x) >> (8 * b)) & 0xff);
            h *= 1099511628211ull;
        }
    }
    return h;
}

std::string digest_hex(std::uint64_t d) {
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = hex[d & 0xf];
        d >>= 4;
    }
    return s;
}

Elem FiniteGroup::power(Elem x, long long e) const {
    if (e < 0) return power(inverse[x], -e);
    Elem r = identity;
    Elem b = x;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

int FiniteGroup::elem_order(Elem x) const {
    int n = 1;
    Elem y = x;
    while (y != identity) {
        y = mul(y, x);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    for (int x = 0; x < order; ++x)
        for (int y = x + 1; y < order; ++y)
            if (table[x][y] != table[y][x]) return false;
    return true;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (int x = 0; x < order; ++x) e = std::lcm(e, (long long)elem_order(x));
    return static_cast<int>(e);
}

std::uint64_t FiniteGroup::digest() const {
    std::uint64_t h = fnv1a64_ints({order, identity});
    for (const auto& row : table) h = fnv1a64_ints(row, h);
    return h;
}

bool Subgroup::contains(Elem parent_elem) const {
    return std::binary_search(elems.begin(), elems.end(), parent_elem);
}

int Subgroup::index_of(Elem parent_elem) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), parent_elem);
    if (it == elems.end() || *it != parent_elem)
        throw ValidationError(Fault::NotASubgroup, "element not in subgroup", {parent_elem});
    return static_cast<int>(it - elems.begin());
}

FiniteGroup validate_group_table(const std::vector<std::vector<int>>& table, std::string label) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw ValidationError(Fault::NotClosed, "empty table");
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(table[x].size()) != n)
            throw ValidationError(Fault::NotClosed, "table is not square", {x});
        for (int y = 0; y < n; ++y)
            if (table[x][y] < 0 || table[x][y] >= n)
                throw ValidationError(Fault::NotClosed, "entry out of range", {x, y});
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[x][table[y][z]])
                    throw ValidationError(Fault::NotAssociative, "associativity fails", {x, y, z});
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
        if (ok) id = e;
    }
    if (id < 0) throw ValidationError(Fault::NoIdentity, "no two-sided identity");
    std::vector<int> inv(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (table[x][y] == id && table[y][x] == id) {
                inv[x] = y;
                break;
            }
        if (inv[x] < 0) throw ValidationError(Fault::NoInverse, "element has no inverse", {x});
    }
    FiniteGroup G;
    G.order = n;
    G.table = table;
    G.identity = id;
    G.inverse = std::move(inv);
    G.label = std::move(label);
    return G;
}

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != source.order) return false;
    for (int x : map)
        if (x < 0 || x >= target.order) return false;
    if (map[source.identity] != target.identity) return false;
    for (int x = 0; x < source.order; ++x)
        for (int y = 0; y < source.order; ++y)
            if (map[source.table[x][y]] != target.table[map[x]][map[y]]) return false;
    return true;
}

GroupHom make_hom(const FiniteGroup& source, const FiniteGroup& target, std::vector<int> map) {
    if (!is_homomorphism(source, target, map))
        throw ValidationError(Fault::NotAHomomorphism, "map is not a homomorphism");
    GroupHom h;
    h.source = &source;
    h.target = &target;
    h.map = std::move(map);
    return h;
}

Subgroup subgroup_from_elements(const FiniteGroup& G, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    const int m = static_cast<int>(elems.size());
    std::vector<int> pos(G.order, -1);
    for (int i = 0; i < m; ++i) pos[elems[i]] = i;
    if (pos[G.identity] < 0)
        throw ValidationError(Fault::NotASubgroup, "identity missing from subgroup");
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int p = G.table[elems[i]][elems[j]];
            if (pos[p] < 0)
                throw ValidationError(Fault::NotASubgroup, "set not closed", {elems[i], elems[j]});
            table[i][j] = pos[p];
        }
    Subgroup S;
    S.elems = std::move(elems);
    S.group = validate_group_table(table, G.label + "-sub");
    S.embed.source = &S.group;
    S.embed.target = &G;
    S.embed.map = S.elems;
    return S;
}

Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(G.order, 0);
    std::vector<int> frontier{G.identity};
    in[G.identity] = 1;
    for (int g : gens)
        if (!in[g]) {
            in[g] = 1;
            frontier.push_back(g);
        }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < G.order; ++x) {
            if (!in[x]) continue;
            for (int y = 0; y < G.order; ++y) {
                if (!in[y]) continue;
                int p = G.table[x][y];
                if (!in[p]) {
                    in[p] = 1;
                    grew = true;
                }
            }
        }
    }
    std::vector<int> elems;
    for (int x = 0; x < G.order; ++x)
        if (in[x]) elems.push_back(x);
    return subgroup_from_elements(G, std::move(elems));
}

Subgroup center(const FiniteGroup& G) {
    std::vector<int> elems;
    for (int z = 0; z < G.order; ++z) {
        bool central = true;
        for (int g = 0; g < G.order && central; ++g) central = G.table[z][g] == G.table[g][z];
        if (central) elems.push_back(z);
    }
    return subgroup_from_elements(G, std::move(elems));
}

bool is_normal(const FiniteGroup& G, const Subgroup& N, std::vector<int>* witness) {
    for (int g = 0; g < G.order; ++g)
        for (int x : N.elems) {
            int c = G.conj(g, x);
            if (!N.contains(c)) {
                if (witness) *witness = {g, x};
                return false;
            }
        }
    return true;
}

Quotient quotient_by_normal(const FiniteGroup& G, const Subgroup& N) {
    std::vector<int> w;
    if (!is_normal(G, N, &w))
        throw ValidationError(Fault::NotNormal, "subgroup is not normal", w);
    // Cosets keyed by their smallest member; quotient elements ordered by
    // that representative.
    std::vector<int> cosetKey(G.order, -1);
    std::vector<int> reps;
    for (int g = 0; g < G.order; ++g) {
        if (cosetKey[g] >= 0) continue;
        int rep = g;
        std::vector<int> members;
        for (int x : N.elems) members.push_back(G.table[g][x]);
        for (int m : members) rep = std::min(rep, m);
        for (int m : members) cosetKey[m] = rep;
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<int> repIndex(G.order, -1);
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) repIndex[reps[i]] = i;
    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) table[i][j] = repIndex[cosetKey[G.table[reps[i]][reps[j]]]];
    Quotient Q;
    Q.group = validate_group_table(table, G.label + "/" + N.group.label);
    Q.cosetRep = reps;
    std::vector<int> proj(G.order);
    for (int g = 0; g < G.order; ++g) proj[g] = repIndex[cosetKey[g]];
    Q.projection.source = &G;
    Q.projection.target = &Q.group;
    Q.projection.map = std::move(proj);
    return Q;
}

int SemidirectProduct::pair_index(Elem n, Elem q) const { return q * nOrder + n; }

std::pair<Elem, Elem> SemidirectProduct::unpair(Elem x) const {
    return {x % nOrder, x / nOrder};
}

SemidirectProduct semidirect_product(const FiniteGroup& N, const FiniteGroup& Q,
                                     const std::vector<int>& act) {
    const AutTower& tower = automorphism_tower(N);
    if (static_cast<int>(act.size()) != Q.order)
        throw ValidationError(Fault::NotAHomomorphism, "action map has wrong size");
    for (int a : act)
        if (a < 0 || a >= tower.autGroup.order)
            throw ValidationError(Fault::NotAHomomorphism, "action image out of range");
    if (!is_homomorphism(Q, tower.autGroup, act))
        throw ValidationError(Fault::NotAHomomorphism, "action is not a homomorphism");

    SemidirectProduct P;
    P.nOrder = N.order;
    P.qOrder = Q.order;
    const int total = N.order * Q.order;
    std::vector<std::vector<int>> table(total, std::vector<int>(total));
    for (int q1 = 0; q1 < Q.order; ++q1)
        for (int n1 = 0; n1 < N.order; ++n1)
            for (int q2 = 0; q2 < Q.order; ++q2)
                for (int n2 = 0; n2 < N.order; ++n2) {
                    int moved = tower.autElems[act[q1]].map[n2];
                    int n = N.table[n1][moved];
                    int q = Q.table[q1][q2];
                    table[q1 * N.order + n1][q2 * N.order + n2] = q * N.order + n;
                }
    P.group = validate_group_table(table, N.label + ":" + Q.label);
    P.embedN.source = &N;
    P.embedN.target = &P.group;
    P.embedN.map.resize(N.order);
    for (int n = 0; n < N.order; ++n) P.embedN.map[n] = Q.identity * N.order + n;
    P.embedQ.source = &Q;
    P.embedQ.target = &P.group;
    P.embedQ.map.resize(Q.order);
    for (int q = 0; q < Q.order; ++q) P.embedQ.map[q] = q * N.order + N.identity;
    P.projQ.source = &P.group;
    P.projQ.target = &Q;
    P.projQ.map.resize(total);
    for (int x = 0; x < total; ++x) P.projQ.map[x] = x / N.order;
    return P;
}

// -- automorphism tower -------------------------------------------------------

namespace {

bool is_automorphism(const FiniteGroup& G, const Perm& p) {
    std::vector<char> seen(G.order, 0);
    for (int x : p) {
        if (x < 0 || x >= G.order || seen[x]) return false;
        seen[x] = 1;
    }
    return is_homomorphism(G, G, p);
}

/// Backtracking over generator images; remaining images follow from the
/// multiplication table via a word expressing each element in the
/// generators.
void aut_backtrack(const FiniteGroup& G, const std::vector<int>& gens,
                   const std::vector<std::pair<int, int>>& words,  // (elem, built-from) pairs
                   std::vector<Perm>& out) {
    const int k = static_cast<int>(gens.size());
    std::vector<int> images(k, -1);
    std::vector<int> elemOrder(G.order);
    for (int x = 0; x < G.order; ++x) elemOrder[x] = G.elem_order(x);

    std::vector<int> map(G.order, -1);
    auto build = [&]() -> bool {
        std::fill(map.begin(), map.end(), -1);
        map[G.identity] = G.identity;
        for (int i = 0; i < k; ++i) map[gens[i]] = images[i];
        for (const auto& [elem, parts] : words) {
            int a = parts >> 16, b = parts & 0xffff;
            if (map[a] < 0 || map[b] < 0) return false;
            int v = G.table[map[a]][map[b]];
            if (map[elem] >= 0 && map[elem] != v) return false;
            map[elem] = v;
        }
        for (int x = 0; x < G.order; ++x)
            if (map[x] < 0) return false;
        return true;
    };

    std::vector<int> stack;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            if (build() && is_automorphism(G, map)) out.push_back(map);
            return;
        }
        for (int img = 0; img < G.order; ++img) {
            if (elemOrder[img] != elemOrder[gens[i]]) continue;
            images[i] = img;
            self(self, i + 1);
        }
        images[i] = -1;
    };
    rec(rec, 0);
}

AutTower compute_tower(const FiniteGroup& G, int max_order) {
    if (G.order > max_order)
        throw SizeLimitError("automorphism enumeration bound exceeded: order " +
                             std::to_string(G.order));

    std::vector<Perm> auts;
    if (G.order < 8) {
        // Full scan over bijections fixing the identity.
        std::vector<int> rest;
        for (int x = 0; x < G.order; ++x)
            if (x != G.identity) rest.push_back(x);
        std::sort(rest.begin(), rest.end());
        std::vector<int> perm(rest);
        do {
            Perm p(G.order);
            p[G.identity] = G.identity;
            for (size_t i = 0; i < rest.size(); ++i) p[rest[i]] = perm[i];
            if (is_automorphism(G, p)) auts.push_back(p);
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        std::vector<int> gens = minimal_generating_set(G);
        // Express every element as a product of two earlier-known elements.
        std::vector<std::pair<int, int>> words;
        std::vector<char> known(G.order, 0);
        known[G.identity] = 1;
        for (int g : gens) known[g] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < G.order; ++a) {
                if (!known[a]) continue;
                for (int b = 0; b < G.order; ++b) {
                    if (!known[b]) continue;
                    int p = G.table[a][b];
                    if (!known[p]) {
                        known[p] = 1;
                        words.emplace_back(p, (a << 16) | b);
                        grew = true;
                    }
                }
            }
        }
        aut_backtrack(G, gens, words, auts);
    }
    std::sort(auts.begin(), auts.end());
    auts.erase(std::unique(auts.begin(), auts.end()), auts.end());

    AutTower T;
    const int m = static_cast<int>(auts.size());
    T.autElems.resize(m);
    for (int i = 0; i < m; ++i) T.autElems[i] = Automorphism{&G, auts[i]};

    std::map<Perm, int> index;
    for (int i = 0; i < m; ++i) index[auts[i]] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Perm comp(G.order);
            for (int x = 0; x < G.order; ++x) comp[x] = auts[i][auts[j][x]];
            auto it = index.find(comp);
            if (it == index.end())
                throw ValidationError(Fault::NotClosed, "automorphism set not closed");
            table[i][j] = it->second;
        }
    T.autGroup = validate_group_table(table, "Aut(" + G.label + ")");

    std::vector<int> inn;
    for (int g = 0; g < G.order; ++g) {
        Perm p(G.order);
        for (int x = 0; x < G.order; ++x) p[x] = G.conj(g, x);
        inn.push_back(index.at(p));
    }
    std::sort(inn.begin(), inn.end());
    inn.erase(std::unique(inn.begin(), inn.end()), inn.end());
    T.innIndices = inn;

    Subgroup innSub = subgroup_from_elements(T.autGroup, inn);
    Quotient q = quotient_by_normal(T.autGroup, innSub);
    T.outGroup = std::move(q.group);
    T.cosetOf = std::move(q.projection.map);
    T.outGroup.label = "Out(" + G.label + ")";
    return T;
}

}  // namespace

int AutTower::index_of(const Perm& p) const {
    auto cmp = [](const Automorphism& a, const Perm& b) { return a.map < b; };
    auto it = std::lower_bound(autElems.begin(), autElems.end(), p, cmp);
    if (it == autElems.end() || it->map != p) return -1;
    return static_cast<int>(it - autElems.begin());
}

bool AutTower::is_inner(int a) const {
    return std::binary_search(innIndices.begin(), innIndices.end(), a);
}

int AutTower::canonical_lift(int out_elem) const {
    for (int a = 0; a < autGroup.order; ++a)
        if (cosetOf[a] == out_elem) return a;  // autElems sorted, so first hit is smallest
    throw ValidationError(Fault::BadInstance, "out element out of range", {out_elem});
}

const AutTower& automorphism_tower(const FiniteGroup& G, int max_order) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::unique_ptr<AutTower>> cache;
    static std::map<std::uint64_t, FiniteGroup> keepalive;
    std::lock_guard<std::mutex> lock(mu);
    std::uint64_t d = G.digest();
    auto it = cache.find(d);
    if (it != cache.end()) return *it->second;
    // The tower stores Automorphism handles pointing at the group object, so
    // keep a private copy alive alongside the cache entry.
    auto [kit, _] = keepalive.emplace(d, G);
    auto tower = std::make_unique<AutTower>(compute_tower(kit->second, max_order));
    for (auto& a : tower->autElems) a.group = &kit->second;
    auto [cit, __] = cache.emplace(d, std::move(tower));
    return *cit->second;
}

std::vector<int> minimal_generating_set(const FiniteGroup& G) {
    if (G.order == 1) return {};
    // Try subsets of increasing size; elements considered in index order.
    for (int k = 1; k <= 4; ++k) {
        std::vector<int> idx(k);
        std::vector<int> gens;
        auto rec = [&](auto&& self, int depth, int start) -> bool {
            if (depth == k) {
                Subgroup S = generated_subgroup(G, gens);
                return S.group.order == G.order;
            }
            for (int g = start; g < G.order; ++g) {
                if (g == G.identity) continue;
                gens.push_back(g);
                if (self(self, depth + 1, g + 1)) return true;
                gens.pop_back();
            }
            return false;
        };
        if (rec(rec, 0, 0)) return gens;
    }
    // Fall back to all non-identity elements.
    std::vector<int> all;
    for (int x = 0; x < G.order; ++x)
        if (x != G.identity) all.push_back(x);
    return all;
}

std::optional<Perm> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B) {
    if (A.order != B.order) return std::nullopt;
    std::vector<int> ordA(A.order), ordB(B.order);
    for (int x = 0; x < A.order; ++x) ordA[x] = A.elem_order(x);
    for (int x = 0; x < B.order; ++x) ordB[x] = B.elem_order(x);
    {
        auto sa = ordA, sb = ordB;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::vector<int> gens = minimal_generating_set(A);
    if (gens.empty()) {
        Perm p{B.identity};
        return p;
    }
    // Word expansion as in the aut search.
    std::vector<std::pair<int, int>> words;
    std::vector<char> known(A.order, 0);
    known[A.identity] = 1;
    for (int g : gens) known[g] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < A.order; ++a) {
            if (!known[a]) continue;
            for (int b = 0; b < A.order; ++b) {
                if (!known[b]) continue;
                int p = A.table[a][b];
                if (!known[p]) {
                    known[p] = 1;
                    words.emplace_back(p, (a << 16) | b);
                    grew = true;
                }
            }
        }
    }
    const int k = static_cast<int>(gens.size());
    std::vector<int> images(k, -1);
    std::vector<int> map(A.order, -1);
    std::optional<Perm> result;
    auto build = [&]() -> bool {
        std::fill(map.begin(), map.end(), -1);
        map[A.identity] = B.identity;
        for (int i = 0; i < k; ++i) map[gens[i]] = images[i];
        for (const auto& [elem, parts] : words) {
            int a = parts >> 16, b = parts & 0xffff;
            int v = B.table[map[a]][map[b]];
            if (map[elem] >= 0 && map[elem] != v) return false;
            map[elem] = v;
        }
        std::vector<char> seen(B.order, 0);
        for (int x = 0; x < A.order; ++x) {
            if (map[x] < 0 || seen[map[x]]) return false;
            seen[map[x]] = 1;
        }
        for (int x = 0; x < A.order; ++x)
            for (int y = 0; y < A.order; ++y)
                if (map[A.table[x][y]] != B.table[map[x]][map[y]]) return false;
        return true;
    };
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) {
            if (build()) {
                result = map;
                return true;
            }
            return false;
        }
        for (int img = 0; img < B.order; ++img) {
            if (ordB[img] != ordA[gens[i]]) continue;
            images[i] = img;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    rec(rec, 0);
    return result;
}

// -- standard groups ----------------------------------------------------------

FiniteGroup cyclic_group(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return validate_group_table(t, "Z" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    const int n = A.order * B.order;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int b1 = 0; b1 < B.order; ++b1)
        for (int a1 = 0; a1 < A.order; ++a1)
            for (int b2 = 0; b2 < B.order; ++b2)
                for (int a2 = 0; a2 < A.order; ++a2)
                    t[b1 * A.order + a1][b2 * A.order + a2] =
                        B.table[b1][b2] * A.order + A.table[a1][a2];
    return validate_group_table(t, A.label + "x" + B.label);
}

FiniteGroup klein_group() {
    FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(2));
    g.label = "V4";
    return g;
}

FiniteGroup symmetric3() {
    FiniteGroup g = dihedral_group(3);
    g.label = "S3";
    return g;
}

FiniteGroup dihedral_group(int n) {
    // Elements r^i s^j with j in {0,1}, index j*n+i; s r s = r^{-1}.
    const int N = 2 * n;
    auto idx = [&](int i, int j) { return j * n + i; };
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + i2*(-1)^j1) s^(j1+j2)
                    int i = ((i1 + (j1 ? n - i2 : i2)) % n + n) % n;
                    int j = (j1 + j2) % 2;
                    t[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                }
    return validate_group_table(t, "D" + std::to_string(n));
}

FiniteGroup quaternion8() {
    // Indices: 1,-1,i,-i,j,-j,k,-k -> 0..7.
    // Multiplication via the usual quaternion rules.
    auto neg = [](int x) { return x ^ 1; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8, -1));
    const int One = 0, I = 2, J = 4, K = 6;
    auto set = [&](int a, int b, int c) { t[a][b] = c; };
    // Base products of {1,i,j,k}.
    set(One, One, One);
    set(One, I, I);
    set(One, J, J);
    set(One, K, K);
    set(I, One, I);
    set(J, One, J);
    set(K, One, K);
    set(I, I, neg(One));
    set(J, J, neg(One));
    set(K, K, neg(One));
    set(I, J, K);
    set(J, K, I);
    set(K, I, J);
    set(J, I, neg(K));
    set(K, J, neg(I));
    set(I, K, neg(J));
    // Extend by signs.
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ba = a & ~1, bb = b & ~1;
            int sign = (a & 1) ^ (b & 1);
            int base = t[ba][bb];
            t[a][b] = sign ? neg(base) : base;
        }
    return validate_group_table(t, "Q8");
}

}  // namespace extcoh
