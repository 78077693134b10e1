#include "extcoh/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace extcoh {

int AbelianBasis::elem(const std::vector<int>& c) const {
    auto it = elemOf.find(c);
    if (it == elemOf.end())
        throw ValidationError(Fault::BadInstance, "coordinate tuple out of range");
    return it->second;
}

AbelianBasis abelian_basis(const FiniteGroup& A) {
    if (!A.is_abelian()) throw ValidationError(Fault::NotAbelian, "group is not abelian");
    AbelianBasis B;
    B.A = &A;
    if (A.order == 1) {
        B.coords.assign(1, {});
        B.elemOf[{}] = A.identity;
        return B;
    }
    // Peel off a maximal-order cyclic factor, then recurse on a complement
    // found by scanning for元素 whose subgroup intersects the span trivially.
    // Elements are considered in index order, so the result is deterministic.
    std::vector<int> basis;
    std::vector<int> moduli;
    Subgroup span = generated_subgroup(A, {});
    while (span.group.order < A.order) {
        int best = -1, bestOrder = 0;
        for (int x = 0; x < A.order; ++x) {
            if (span.contains(x)) continue;
            // order of x modulo span: smallest k with x^k in span
            int k = 1;
            int y = x;
            while (!span.contains(y)) {
                y = A.table[y][x];
                ++k;
            }
            if (k > bestOrder) {
                bestOrder = k;
                best = x;
            }
        }
        // For a clean direct-sum decomposition we need a representative whose
        // full order equals its order mod span; adjust by a span element.
        int rep = -1;
        for (int s : span.elems) {
            int cand = A.table[best][s];
            if (A.elem_order(cand) == bestOrder) {
                int y = cand, k = 1;
                while (!span.contains(y)) {
                    y = A.table[y][cand];
                    ++k;
                }
                if (k == bestOrder) {
                    rep = cand;
                    break;
                }
            }
        }
        if (rep < 0)
            throw ValidationError(Fault::BadInstance, "abelian basis extraction failed");
        basis.push_back(rep);
        moduli.push_back(bestOrder);
        std::vector<int> gens = span.elems;
        gens.push_back(rep);
        span = generated_subgroup(A, gens);
    }
    // Largest factor first came out naturally; invariant-factor convention
    // wants d_1 | d_2 | ..., i.e. ascending.
    std::reverse(basis.begin(), basis.end());
    std::reverse(moduli.begin(), moduli.end());
    B.basis = basis;
    B.moduli = moduli;

    const int r = static_cast<int>(basis.size());
    std::vector<int> tuple(r, 0);
    std::vector<std::vector<int>> all;
    // Enumerate all coordinate tuples and their elements.
    auto rec = [&](auto&& self, int i, int acc) -> void {
        if (i == r) {
            B.elemOf[tuple] = acc;
            return;
        }
        int cur = acc;
        for (int c = 0; c < moduli[i]; ++c) {
            tuple[i] = c;
            self(self, i + 1, cur);
            cur = A.table[cur][basis[i]];
        }
        tuple[i] = 0;
    };
    rec(rec, 0, A.identity);
    if (static_cast<int>(B.elemOf.size()) != A.order)
        throw ValidationError(Fault::BadInstance, "abelian decomposition is not a direct sum");
    B.coords.assign(A.order, {});
    for (const auto& [c, e] : B.elemOf) B.coords[e] = c;
    return B;
}

ModuleAction trivial_action(const FiniteGroup& A, const FiniteGroup& Q) {
    ModuleAction act;
    act.A = &A;
    act.Q = &Q;
    Perm id(A.order);
    for (int i = 0; i < A.order; ++i) id[i] = i;
    act.perm.assign(Q.order, id);
    return act;
}

// -- echelon ------------------------------------------------------------------

namespace {

int first_nonzero(const std::vector<long long>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

void mod_reduce(std::vector<long long>& v, const std::vector<int>& moduli) {
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] %= moduli[i];
        if (v[i] < 0) v[i] += moduli[i];
    }
}

}  // namespace

Echelon Echelon::build(std::vector<int> moduli,
                       const std::vector<std::vector<long long>>& generators) {
    Echelon E;
    E.moduli = std::move(moduli);
    const int N = static_cast<int>(E.moduli.size());
    std::vector<std::vector<long long>> pool;
    for (auto g : generators) {
        mod_reduce(g, E.moduli);
        if (first_nonzero(g) >= 0) pool.push_back(std::move(g));
    }
    for (int j = 0; j < N; ++j) {
        std::vector<long long> mrow(N, 0);
        mrow[j] = E.moduli[j];
        if (E.moduli[j] > 1) pool.push_back(std::move(mrow));
    }
    for (int col = 0; col < N; ++col) {
        // gcd-combine all pool rows whose first nonzero entry is at col
        while (true) {
            int i1 = -1, i2 = -1;
            for (size_t i = 0; i < pool.size(); ++i) {
                if (first_nonzero(pool[i]) == col) {
                    if (i1 < 0)
                        i1 = static_cast<int>(i);
                    else {
                        i2 = static_cast<int>(i);
                        break;
                    }
                }
            }
            if (i2 < 0) {
                if (i1 >= 0) {
                    E.pivcol.push_back(col);
                    E.step.push_back(pool[i1][col]);
                    E.rows.push_back(pool[i1]);
                    pool.erase(pool.begin() + i1);
                }
                break;
            }
            auto& a = pool[i1];
            auto& b = pool[i2];
            // reduce the larger leading entry by the smaller
            if (a[col] < b[col]) std::swap(a, b);
            long long q = a[col] / b[col];
            for (int j = col; j < N; ++j) a[j] -= q * b[j];
            mod_reduce(a, E.moduli);
            if (first_nonzero(a) < 0) pool.erase(pool.begin() + i1);
        }
    }
    return E;
}

std::vector<long long> Echelon::reduce(std::vector<long long> v) const {
    mod_reduce(v, moduli);
    for (size_t i = 0; i < rows.size(); ++i) {
        long long q = v[pivcol[i]] / step[i];
        if (q != 0)
            for (size_t j = pivcol[i]; j < v.size(); ++j) v[j] -= q * rows[i][j];
        mod_reduce(v, moduli);
    }
    return v;
}

bool Echelon::contains(const std::vector<long long>& v) const {
    auto r = reduce(v);
    return first_nonzero(r) < 0;
}

long long Echelon::subgroup_size() const {
    long long total = 1;
    for (int m : moduli) total *= m;
    long long idx = 1;
    std::vector<long long> stepAt(moduli.size(), 0);
    for (size_t i = 0; i < rows.size(); ++i) stepAt[pivcol[i]] = step[i];
    for (size_t j = 0; j < moduli.size(); ++j) {
        long long s = stepAt[j] == 0 ? moduli[j] : stepAt[j];
        idx *= s;
    }
    return total / idx;
}

// -- Smith normal form ----------------------------------------------------------

SmithResult smith_normal_form(std::vector<std::vector<long long>> M, bool want_row_transform) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows ? static_cast<int>(M[0].size()) : 0;
    SmithResult R;
    if (want_row_transform) {
        R.rowTransform.assign(rows, std::vector<long long>(rows, 0));
        for (int i = 0; i < rows; ++i) R.rowTransform[i][i] = 1;
    }
    auto swap_rows = [&](int a, int b) {
        std::swap(M[a], M[b]);
        if (want_row_transform) std::swap(R.rowTransform[a], R.rowTransform[b]);
    };
    auto add_row = [&](int dst, int src, long long k) {
        for (int j = 0; j < cols; ++j) M[dst][j] += k * M[src][j];
        if (want_row_transform)
            for (int j = 0; j < rows; ++j) R.rowTransform[dst][j] += k * R.rowTransform[src][j];
    };
    auto negate_row = [&](int a) {
        for (int j = 0; j < cols; ++j) M[a][j] = -M[a][j];
        if (want_row_transform)
            for (int j = 0; j < rows; ++j) R.rowTransform[a][j] = -R.rowTransform[a][j];
    };
    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(M[i][a], M[i][b]);
    };
    auto add_col = [&](int dst, int src, long long k) {
        for (int i = 0; i < rows; ++i) M[i][dst] += k * M[i][src];
    };

    int t = 0;
    const int n = std::min(rows, cols);
    while (t < n) {
        // find pivot: smallest nonzero |entry| in the remaining block
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (M[i][j] != 0 && (pi < 0 || std::abs(M[i][j]) < best)) {
                    best = std::abs(M[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        if (M[t][t] < 0) negate_row(t);
        bool again = false;
        for (int i = t + 1; i < rows; ++i) {
            long long q = M[i][t] / M[t][t];
            if (q != 0) add_row(i, t, -q);
            if (M[i][t] != 0) again = true;
        }
        for (int j = t + 1; j < cols; ++j) {
            long long q = M[t][j] / M[t][t];
            if (q != 0) add_col(j, t, -q);
            if (M[t][j] != 0) again = true;
        }
        if (again) continue;  // re-select a smaller pivot
        // divisibility pass: pivot must divide the rest of the block
        bool fixed = true;
        for (int i = t + 1; i < rows && fixed; ++i)
            for (int j = t + 1; j < cols && fixed; ++j)
                if (M[i][j] % M[t][t] != 0) {
                    add_row(t, i, 1);
                    fixed = false;
                }
        if (!fixed) continue;
        ++t;
    }
    R.diag.assign(n, 0);
    for (int i = 0; i < t; ++i) R.diag[i] = M[i][i];
    return R;
}

// -- bar resolution -----------------------------------------------------------

namespace {

/// Integer r x r matrix of the module action of q on coordinates.
std::vector<std::vector<long long>> action_matrix(const AbelianBasis& B, const ModuleAction& act,
                                                  int q) {
    const int r = B.rank();
    std::vector<std::vector<long long>> M(r, std::vector<long long>(r, 0));
    for (int j = 0; j < r; ++j) {
        int img = act.perm[q][B.basis[j]];
        const auto& c = B.coords[img];
        for (int i = 0; i < r; ++i) M[i][j] = c[i];
    }
    return M;
}

struct BarComplex {
    const FiniteGroup* Q;
    AbelianBasis B;
    std::vector<int> nonid;  // nonidentity elements of Q in order
    int m1;                  // |Q| - 1
    int r;

    // coordinate index of (tuple position p, basis index i)
    int coord(int p, int i) const { return p * r + i; }

    std::vector<int> moduli_for(int positions) const {
        std::vector<int> mod(positions * r);
        for (int p = 0; p < positions; ++p)
            for (int i = 0; i < r; ++i) mod[coord(p, i)] = B.moduli[i];
        return mod;
    }
};

}  // namespace

std::vector<long long> AbelianCohGroup::to_coords(const std::vector<int>& cochain) const {
    std::vector<long long> v;
    v.reserve(cochain.size() * basisA.rank());
    for (int e : cochain)
        for (int c : basisA.coords[e]) v.push_back(c);
    return v;
}

std::vector<int> AbelianCohGroup::from_coords(const std::vector<long long>& v) const {
    const int r = basisA.rank();
    std::vector<int> cochain(v.size() / std::max(r, 1), basisA.A->identity);
    if (r == 0) return cochain;
    for (size_t p = 0; p < cochain.size(); ++p) {
        std::vector<int> tuple(r);
        for (int i = 0; i < r; ++i)
            tuple[i] = static_cast<int>(((v[p * r + i] % basisA.moduli[i]) + basisA.moduli[i]) %
                                        basisA.moduli[i]);
        cochain[p] = basisA.elem(tuple);
    }
    return cochain;
}

int AbelianCohGroup::class_of(const std::vector<int>& cochain) const {
    auto canon = coboundaries.reduce(to_coords(cochain));
    auto it = canonIndex.find(canon);
    if (it == canonIndex.end())
        throw ValidationError(Fault::BadInstance, "cochain is not a cocycle of this group");
    return it->second;
}

AbelianCohGroup abelian_cohomology(int degree, const FiniteGroup& Q, const ModuleAction& action,
                                   long long class_limit) {
    if (degree != 1 && degree != 2)
        throw ValidationError(Fault::BadInstance, "degree must be 1 or 2");
    BarComplex C;
    C.Q = &Q;
    C.B = abelian_basis(*action.A);
    for (int x = 0; x < Q.order; ++x)
        if (x != Q.identity) C.nonid.push_back(x);
    C.m1 = static_cast<int>(C.nonid.size());
    C.r = C.B.rank();

    AbelianCohGroup H;
    H.degree = degree;
    H.basisA = C.B;
    H.Q = &Q;

    const int r = C.r;
    if (r == 0 || C.m1 == 0) {
        H.cochainModuli.assign(0, 0);
        H.coboundaries = Echelon::build({}, {});
        H.reps = {std::vector<int>((degree == 1 ? C.m1 : C.m1 * C.m1), action.A->identity)};
        H.canonIndex[{}] = 0;
        H.addTable = cyclic_group(1);
        return H;
    }

    std::vector<int> pos(Q.order, -1);
    for (int p = 0; p < C.m1; ++p) pos[C.nonid[p]] = p;

    std::vector<std::vector<std::vector<long long>>> actM(Q.order);
    for (int q = 0; q < Q.order; ++q) actM[q] = action_matrix(C.B, action, q);

    // Dimensions of the normalized cochain spaces involved.
    const int n0 = r;
    const int n1 = C.m1 * r;
    const int n2 = C.m1 * C.m1 * r;
    const int n3 = C.m1 * C.m1 * C.m1 * r;

    // pair/triple position helpers
    auto pair_pos = [&](int px, int py) { return px * C.m1 + py; };
    auto triple_pos = [&](int px, int py, int pz) { return (px * C.m1 + py) * C.m1 + pz; };

    // delta1: C1 -> C2, (d c)_{x,y} = x*c_y - c_{xy} + c_x
    auto delta1_columns = [&]() {
        // one generating column per (position p, basis i): image of the
        // indicator cochain e_{p,i}
        std::vector<std::vector<long long>> cols;
        for (int p = 0; p < C.m1; ++p)
            for (int i = 0; i < r; ++i) {
                std::vector<long long> img(n2, 0);
                int y0 = C.nonid[p];
                for (int px = 0; px < C.m1; ++px)
                    for (int py = 0; py < C.m1; ++py) {
                        int x = C.nonid[px], y = C.nonid[py];
                        int xy = Q.table[x][y];
                        int pp = pair_pos(px, py);
                        if (py == p)  // x * c_y term
                            for (int k = 0; k < r; ++k)
                                img[pp * r + k] += actM[x][k][i];
                        if (xy != Q.identity && pos[xy] == p)  // -c_{xy}
                            img[pp * r + i] -= 1;
                        if (px == p)  // +c_x
                            img[pp * r + i] += 1;
                    }
                (void)y0;
                cols.push_back(std::move(img));
            }
        return cols;
    };

    // delta0: C0 -> C1, (d a)_x = x*a - a
    auto delta0_columns = [&]() {
        std::vector<std::vector<long long>> cols;
        for (int i = 0; i < r; ++i) {
            std::vector<long long> img(n1, 0);
            for (int px = 0; px < C.m1; ++px) {
                int x = C.nonid[px];
                for (int k = 0; k < r; ++k) img[px * r + k] += actM[x][k][i];
                img[px * r + i] -= 1;
            }
            cols.push_back(std::move(img));
        }
        return cols;
    };

    // The outgoing differential as a dense integer matrix acting on
    // coordinates (rows = target coords, cols = source coords).
    std::vector<std::vector<long long>> delta_out;
    std::vector<int> modDom, modCod;
    std::vector<std::vector<long long>> relation_gens;  // image of incoming differential

    if (degree == 1) {
        modDom = C.moduli_for(C.m1);
        modCod = C.moduli_for(C.m1 * C.m1);
        delta_out.assign(n2, std::vector<long long>(n1, 0));
        auto cols = delta1_columns();
        for (int c = 0; c < n1; ++c)
            for (int rw = 0; rw < n2; ++rw) delta_out[rw][c] = cols[c][rw];
        relation_gens = delta0_columns();
    } else {
        modDom = C.moduli_for(C.m1 * C.m1);
        modCod = C.moduli_for(C.m1 * C.m1 * C.m1);
        // delta2: (d b)_{x,y,z} = x*b_{y,z} - b_{xy,z} + b_{x,yz} - b_{x,y}
        delta_out.assign(n3, std::vector<long long>(n2, 0));
        for (int pp = 0; pp < C.m1 * C.m1; ++pp)
            for (int i = 0; i < r; ++i) {
                int srcCol = pp * r + i;
                int pa = pp / C.m1, pb = pp % C.m1;
                for (int px = 0; px < C.m1; ++px)
                    for (int py = 0; py < C.m1; ++py)
                        for (int pz = 0; pz < C.m1; ++pz) {
                            int x = C.nonid[px], y = C.nonid[py], z = C.nonid[pz];
                            int tp = triple_pos(px, py, pz);
                            if (py == pa && pz == pb)
                                for (int k = 0; k < r; ++k)
                                    delta_out[tp * r + k][srcCol] += actM[x][k][i];
                            int xy = Q.table[x][y];
                            if (xy != Q.identity && pos[xy] == pa && pz == pb)
                                delta_out[tp * r + i][srcCol] -= 1;
                            int yz = Q.table[y][z];
                            if (px == pa && yz != Q.identity && pos[yz] == pb)
                                delta_out[tp * r + i][srcCol] += 1;
                            if (px == pa && py == pb) delta_out[tp * r + i][srcCol] -= 1;
                        }
            }
        relation_gens = delta1_columns();
    }

    const int nDom = static_cast<int>(modDom.size());
    const int nCod = static_cast<int>(modCod.size());

    // Kernel lattice of delta_out mod modCod: integer kernel of [delta | -diag(modCod)]
    // computed by column reduction with a transform, then projected to the
    // domain block.
    std::vector<std::vector<long long>> A(nCod, std::vector<long long>(nDom + nCod, 0));
    for (int i = 0; i < nCod; ++i) {
        for (int j = 0; j < nDom; ++j) A[i][j] = delta_out[i][j];
        A[i][nDom + i] = -modCod[i];
    }
    // column HNF with transform: U tracks column ops on identity
    const int nc = nDom + nCod;
    std::vector<std::vector<long long>> U(nc, std::vector<long long>(nc, 0));
    for (int i = 0; i < nc; ++i) U[i][i] = 1;
    auto colswap = [&](int a, int b) {
        for (int i = 0; i < nCod; ++i) std::swap(A[i][a], A[i][b]);
        for (int i = 0; i < nc; ++i) std::swap(U[i][a], U[i][b]);
    };
    auto coladd = [&](int dst, int src, long long k) {
        for (int i = 0; i < nCod; ++i) A[i][dst] += k * A[i][src];
        for (int i = 0; i < nc; ++i) U[i][dst] += k * U[i][src];
    };
    int lead = 0;
    for (int row = 0; row < nCod && lead < nc; ++row) {
        while (true) {
            int best = -1;
            for (int j = lead; j < nc; ++j)
                if (A[row][j] != 0 && (best < 0 || std::abs(A[row][j]) < std::abs(A[row][best])))
                    best = j;
            if (best < 0) break;
            colswap(lead, best);
            bool clean = true;
            for (int j = lead + 1; j < nc; ++j) {
                long long q = A[row][j] / A[row][lead];
                if (q != 0) coladd(j, lead, -q);
                if (A[row][j] != 0) clean = false;
            }
            if (clean) {
                ++lead;
                break;
            }
        }
    }
    // columns >= lead of A are zero -> corresponding U columns span the kernel
    std::vector<std::vector<long long>> kernel_basis;  // vectors in Z^{nDom}
    for (int j = lead; j < nc; ++j) {
        std::vector<long long> v(nDom);
        for (int i = 0; i < nDom; ++i) v[i] = U[i][j];
        kernel_basis.push_back(std::move(v));
    }

    // Solutions group Zk = kernel / (relations + moduli). Work inside the
    // kernel's coordinates: express relations in terms of the kernel basis.
    // Build echelon of kernel basis for solving B*x = rel.
    // (The kernel lattice contains moduli*e_j, so relations and moduli rows
    // are all expressible.)
    const int k = static_cast<int>(kernel_basis.size());
    for (int j = 0; j < nDom; ++j) {
        std::vector<long long> v(nDom, 0);
        v[j] = modDom[j];
        relation_gens.push_back(std::move(v));
    }

    // Solve B * x = w for each relation w (B = kernel basis as columns).
    // Use integer column reduction of B with transform to triangular form.
    std::vector<std::vector<long long>> Bm(nDom, std::vector<long long>(k, 0));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < nDom; ++i) Bm[i][j] = kernel_basis[j][i];
    std::vector<std::vector<long long>> V(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; ++i) V[i][i] = 1;
    {
        auto cswap = [&](int a, int b) {
            for (int i = 0; i < nDom; ++i) std::swap(Bm[i][a], Bm[i][b]);
            for (int i = 0; i < k; ++i) std::swap(V[i][a], V[i][b]);
        };
        auto cadd = [&](int dst, int src, long long q) {
            for (int i = 0; i < nDom; ++i) Bm[i][dst] += q * Bm[i][src];
            for (int i = 0; i < k; ++i) V[i][dst] += q * V[i][src];
        };
        int ld = 0;
        for (int row = 0; row < nDom && ld < k; ++row) {
            while (true) {
                int best = -1;
                for (int j = ld; j < k; ++j)
                    if (Bm[row][j] != 0 &&
                        (best < 0 || std::abs(Bm[row][j]) < std::abs(Bm[row][best])))
                        best = j;
                if (best < 0) break;
                cswap(ld, best);
                bool clean = true;
                for (int j = ld + 1; j < k; ++j) {
                    long long q = Bm[row][j] / Bm[row][ld];
                    if (q != 0) cadd(j, ld, -q);
                    if (Bm[row][j] != 0) clean = false;
                }
                if (clean) {
                    ++ld;
                    break;
                }
            }
        }
    }
    // Bm is now column-echelon (per processed rows). Solve by forward substitution.
    auto solve_in_kernel = [&](const std::vector<long long>& w) {
        std::vector<long long> rhs = w;
        std::vector<long long> xcoef(k, 0);
        int col = 0;
        for (int row = 0; row < nDom && col < k; ++row) {
            if (Bm[row][col] == 0) continue;
            if (rhs[row] % Bm[row][col] != 0)
                throw ValidationError(Fault::BadInstance, "relation not in kernel lattice");
            long long q = rhs[row] / Bm[row][col];
            if (q != 0)
                for (int i = row; i < nDom; ++i) rhs[i] -= q * Bm[i][col];
            xcoef[col] = q;
            ++col;
        }
        for (int i = 0; i < nDom; ++i)
            if (rhs[i] != 0)
                throw ValidationError(Fault::BadInstance, "relation not in kernel lattice");
        // actual solution = V * xcoef
        std::vector<long long> x(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) x[i] += V[i][j] * xcoef[j];
        return x;
    };

    std::vector<std::vector<long long>> relInKernel(k, std::vector<long long>());
    {
        std::vector<std::vector<long long>> relCols;
        for (const auto& w : relation_gens) relCols.push_back(solve_in_kernel(w));
        // matrix X with columns relCols: quotient Z^k / colspan(X)
        std::vector<std::vector<long long>> X(k, std::vector<long long>(relCols.size(), 0));
        for (size_t j = 0; j < relCols.size(); ++j)
            for (int i = 0; i < k; ++i) X[i][j] = relCols[j][i];
        SmithResult S = smith_normal_form(X, true);
        // group = ⊕ Z/diag_i over rows; rows beyond diag count are free (cannot
        // happen for finite cohomology — guarded below).
        std::vector<int> inv;
        std::vector<int> genRows;
        for (int i = 0; i < k; ++i) {
            long long d = i < static_cast<int>(S.diag.size()) ? S.diag[i] : 0;
            if (d == 0)
                throw ValidationError(Fault::BadInstance, "cohomology group is not finite");
            if (d > 1) {
                inv.push_back(static_cast<int>(d));
                genRows.push_back(i);
            }
        }
        long long size = 1;
        for (int d : inv) size *= d;
        if (size > class_limit)
            throw SizeLimitError("cohomology class count exceeds limit: " + std::to_string(size));
        H.invariants = inv;
        H.size = size;
        H.exponent = 1;
        for (int d : inv) H.exponent = static_cast<int>(std::lcm((long long)H.exponent, (long long)d));

        // Generators of the cyclic factors in domain coordinates: with
        // U X V' = D, row i of U^{-1}... we use: new basis of Z^k is given by
        // (U^{-1}) columns; equivalently solve U * g = e_i. Since U is
        // unimodular, invert by solving with Smith on U — simpler: compute
        // adjugate-free inverse via Gaussian elimination over rationals is
        // unsafe; instead note that rows of U give coordinates: class coords
        // of a kernel vector v are (U*v) rows at genRows, mod invariants.
        // For representatives we need vectors w with U*w = e_{genRow}.
        // Build U inverse by integer row reduction of [U | I].
        const auto& Umat = S.rowTransform;
        std::vector<std::vector<long long>> aug(k, std::vector<long long>(2 * k, 0));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) aug[i][j] = Umat[i][j];
            aug[i][k + i] = 1;
        }
        // integer Gauss-Jordan (U unimodular => pivots are ±1 after reduction)
        for (int col = 0; col < k; ++col) {
            int piv = -1;
            for (int i = col; i < k; ++i)
                if (std::abs(aug[i][col]) == 1) {
                    piv = i;
                    break;
                }
            if (piv < 0) {
                // gcd-reduce until a unit pivot appears
                for (int i = col; i < k; ++i)
                    if (aug[i][col] != 0) {
                        if (piv < 0 || std::abs(aug[i][col]) < std::abs(aug[piv][col])) piv = i;
                    }
                if (piv < 0) throw ValidationError(Fault::BadInstance, "transform not unimodular");
                // one round of reduction, then retry this column
                for (int i = col; i < k; ++i) {
                    if (i == piv || aug[i][col] == 0) continue;
                    long long q = aug[i][col] / aug[piv][col];
                    for (int j = 0; j < 2 * k; ++j) aug[i][j] -= q * aug[piv][j];
                }
                --col;
                continue;
            }
            std::swap(aug[col], aug[piv]);
            if (aug[col][col] < 0)
                for (int j = 0; j < 2 * k; ++j) aug[col][j] = -aug[col][j];
            for (int i = 0; i < k; ++i) {
                if (i == col || aug[i][col] == 0) continue;
                long long q = aug[i][col] / aug[col][col];
                for (int j = 0; j < 2 * k; ++j) aug[i][j] -= q * aug[col][j];
            }
        }
        std::vector<std::vector<long long>> Uinv(k, std::vector<long long>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) Uinv[i][j] = aug[i][k + j];

        // factor generators as domain-coordinate vectors
        std::vector<std::vector<long long>> gens;
        for (int gi : genRows) {
            std::vector<long long> v(nDom, 0);
            for (int j = 0; j < k; ++j) {
                long long c = Uinv[j][gi];
                if (c == 0) continue;
                for (int i = 0; i < nDom; ++i) v[i] += c * kernel_basis[j][i];
            }
            gens.push_back(std::move(v));
        }

        // canonical forms via the coboundary echelon
        H.cochainModuli = modDom;
        std::vector<std::vector<long long>> cobGens = relation_gens;  // includes moduli rows
        H.coboundaries = Echelon::build(modDom, cobGens);

        // enumerate all classes as coordinate tuples over the invariants
        std::vector<int> tuple(inv.size(), 0);
        std::vector<std::vector<int>> reps;
        auto recEnum = [&](auto&& self, size_t i) -> void {
            if (i == inv.size()) {
                std::vector<long long> v(nDom, 0);
                for (size_t gi = 0; gi < gens.size(); ++gi)
                    for (int c = 0; c < nDom; ++c) v[c] += (long long)tuple[gi] * gens[gi][c];
                for (int c = 0; c < nDom; ++c) {
                    v[c] %= modDom[c];
                    if (v[c] < 0) v[c] += modDom[c];
                }
                auto canon = H.coboundaries.reduce(v);
                int idx = static_cast<int>(reps.size());
                auto [it, fresh] = H.canonIndex.emplace(canon, idx);
                if (!fresh)
                    throw ValidationError(Fault::BadInstance, "duplicate cohomology class rep");
                reps.push_back(H.from_coords(canon));
                return;
            }
            for (int c = 0; c < inv[i]; ++c) {
                tuple[i] = c;
                self(self, i + 1);
            }
            tuple[i] = 0;
        };
        recEnum(recEnum, 0);
        H.reps = std::move(reps);

        // addition table on classes via coordinate addition
        const int sz = static_cast<int>(H.reps.size());
        std::vector<std::vector<int>> add(sz, std::vector<int>(sz));
        // decode index -> tuple (mixed radix, first factor fastest? use the
        // enumeration order above: last index varies fastest)
        auto tuple_of = [&](int idx) {
            std::vector<int> t(inv.size(), 0);
            for (int i = static_cast<int>(inv.size()) - 1; i >= 0; --i) {
                t[i] = idx % inv[i];
                idx /= inv[i];
            }
            return t;
        };
        auto index_of = [&](const std::vector<int>& t) {
            int idx = 0;
            for (size_t i = 0; i < inv.size(); ++i) idx = idx * inv[i] + t[i];
            return idx;
        };
        for (int a = 0; a < sz; ++a)
            for (int b = 0; b < sz; ++b) {
                auto ta = tuple_of(a), tb = tuple_of(b);
                std::vector<int> tc(inv.size());
                for (size_t i = 0; i < inv.size(); ++i) tc[i] = (ta[i] + tb[i]) % inv[i];
                add[a][b] = index_of(tc);
            }
        H.addTable = sz ? validate_group_table(add, "H" + std::to_string(degree))
                        : cyclic_group(1);
    }
    return H;
}

}  // namespace extcoh
