#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "flatlas/common.hpp"
#include "flatlas/diagram.hpp"

namespace flatlas {

// Exact integer linear algebra on small matrices (entries stay tiny; all
// eliminations are gcd-based, so there is no coefficient blow-up to speak of
// at these sizes).
using IntMat = std::vector<std::vector<long long>>;

namespace intlin {

inline int rows(const IntMat& m) { return static_cast<int>(m.size()); }
inline int cols(const IntMat& m) { return m.empty() ? 0 : static_cast<int>(m.front().size()); }

inline IntMat transpose(const IntMat& m) {
    IntMat t(static_cast<size_t>(cols(m)), std::vector<long long>(static_cast<size_t>(rows(m)), 0));
    for (int i = 0; i < rows(m); ++i)
        for (int j = 0; j < cols(m); ++j) t[static_cast<size_t>(j)][static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return t;
}

// Row Hermite normal form via integer row operations: echelon with positive
// pivots, entries below each pivot zero, entries above reduced into
// [0, pivot).  Returns the HNF; zero rows are dropped.
inline IntMat row_hnf(IntMat m) {
    int R = rows(m), C = cols(m);
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        // Euclid downwards until a single nonzero entry remains in this
        // column at or below `row`.
        while (true) {
            int piv = -1;
            for (int i = row; i < R; ++i)
                if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                    if (piv < 0 ||
                        std::abs(m[static_cast<size_t>(i)][static_cast<size_t>(col)]) <
                            std::abs(m[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
                        piv = i;
                }
            if (piv < 0) break;
            std::swap(m[static_cast<size_t>(row)], m[static_cast<size_t>(piv)]);
            bool clean = true;
            for (int i = row + 1; i < R; ++i) {
                long long q = m[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                              m[static_cast<size_t>(row)][static_cast<size_t>(col)];
                if (q != 0)
                    for (int j = 0; j < C; ++j)
                        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                            q * m[static_cast<size_t>(row)][static_cast<size_t>(j)];
                if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] == 0) continue;
        if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] < 0)
            for (int j = 0; j < C; ++j) m[static_cast<size_t>(row)][static_cast<size_t>(j)] *= -1;
        long long p = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int i = 0; i < row; ++i) {
            long long q = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            long long f = (q % p + p) % p;
            long long shift = (q - f) / p;
            if (shift != 0)
                for (int j = 0; j < C; ++j)
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                        shift * m[static_cast<size_t>(row)][static_cast<size_t>(j)];
        }
        ++row;
    }
    m.resize(static_cast<size_t>(row));
    return m;
}

inline int rank(const IntMat& m) { return rows(row_hnf(m)); }

// Basis of the integer kernel {x : m x = 0} as rows, via column reduction
// with a unimodular transform tracker.
inline IntMat kernel_basis(const IntMat& m) {
    int R = rows(m), C = cols(m);
    IntMat a = m;
    IntMat v(static_cast<size_t>(C), std::vector<long long>(static_cast<size_t>(C), 0));
    for (int j = 0; j < C; ++j) v[static_cast<size_t>(j)][static_cast<size_t>(j)] = 1;
    auto colswap = [&](int x, int y) {
        for (int i = 0; i < R; ++i) std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(x)], a[static_cast<size_t>(i)][static_cast<size_t>(y)]);
        for (int i = 0; i < C; ++i) std::swap(v[static_cast<size_t>(i)][static_cast<size_t>(x)], v[static_cast<size_t>(i)][static_cast<size_t>(y)]);
    };
    auto colsub = [&](int x, int y, long long q) { // col_x -= q * col_y
        if (q == 0) return;
        for (int i = 0; i < R; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(x)] -= q * a[static_cast<size_t>(i)][static_cast<size_t>(y)];
        for (int i = 0; i < C; ++i) v[static_cast<size_t>(i)][static_cast<size_t>(x)] -= q * v[static_cast<size_t>(i)][static_cast<size_t>(y)];
    };
    int col = 0;
    for (int rowi = 0; rowi < R && col < C; ++rowi) {
        while (true) {
            int piv = -1;
            for (int j = col; j < C; ++j)
                if (a[static_cast<size_t>(rowi)][static_cast<size_t>(j)] != 0) {
                    if (piv < 0 || std::abs(a[static_cast<size_t>(rowi)][static_cast<size_t>(j)]) <
                                       std::abs(a[static_cast<size_t>(rowi)][static_cast<size_t>(piv)]))
                        piv = j;
                }
            if (piv < 0) break;
            colswap(col, piv);
            bool clean = true;
            for (int j = col + 1; j < C; ++j) {
                long long q = a[static_cast<size_t>(rowi)][static_cast<size_t>(j)] /
                              a[static_cast<size_t>(rowi)][static_cast<size_t>(col)];
                colsub(j, col, q);
                if (a[static_cast<size_t>(rowi)][static_cast<size_t>(j)] != 0) clean = false;
            }
            if (clean) break;
        }
        if (col < C && a[static_cast<size_t>(rowi)][static_cast<size_t>(col)] != 0) ++col;
    }
    IntMat ker;
    for (int j = col; j < C; ++j) {
        std::vector<long long> basis(static_cast<size_t>(C));
        for (int i = 0; i < C; ++i) basis[static_cast<size_t>(i)] = v[static_cast<size_t>(i)][static_cast<size_t>(j)];
        ker.push_back(std::move(basis));
    }
    return ker;
}

// Invariant factors of the Smith normal form (nonzero ones, in divisibility
// order).
inline std::vector<long long> snf_invariants(IntMat m) {
    int R = rows(m), C = cols(m);
    std::vector<long long> inv;
    int top = 0;
    while (top < R && top < C) {
        // Find a nonzero entry in the submatrix.
        int pi = -1, pj = -1;
        for (int i = top; i < R; ++i)
            for (int j = top; j < C; ++j)
                if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0 &&
                    (pi < 0 || std::abs(m[static_cast<size_t>(i)][static_cast<size_t>(j)]) <
                                   std::abs(m[static_cast<size_t>(pi)][static_cast<size_t>(pj)]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[static_cast<size_t>(top)], m[static_cast<size_t>(pi)]);
        for (int i = 0; i < R; ++i) std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(top)], m[static_cast<size_t>(i)][static_cast<size_t>(pj)]);
        bool again = false;
        for (int i = top + 1; i < R; ++i) {
            long long q = m[static_cast<size_t>(i)][static_cast<size_t>(top)] / m[static_cast<size_t>(top)][static_cast<size_t>(top)];
            for (int j = 0; j < C; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= q * m[static_cast<size_t>(top)][static_cast<size_t>(j)];
            if (m[static_cast<size_t>(i)][static_cast<size_t>(top)] != 0) again = true;
        }
        for (int j = top + 1; j < C; ++j) {
            long long q = m[static_cast<size_t>(top)][static_cast<size_t>(j)] / m[static_cast<size_t>(top)][static_cast<size_t>(top)];
            for (int i = 0; i < R; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= q * m[static_cast<size_t>(i)][static_cast<size_t>(top)];
            if (m[static_cast<size_t>(top)][static_cast<size_t>(j)] != 0) again = true;
        }
        if (again) continue; // repeat with smaller pivot
        // Ensure divisibility: fold any bad entry into the pivot column.
        bool bad = false;
        for (int i = top + 1; i < R && !bad; ++i)
            for (int j = top + 1; j < C && !bad; ++j)
                if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] % m[static_cast<size_t>(top)][static_cast<size_t>(top)] != 0) {
                    for (int jj = 0; jj < C; ++jj)
                        m[static_cast<size_t>(top)][static_cast<size_t>(jj)] += m[static_cast<size_t>(i)][static_cast<size_t>(jj)];
                    bad = true;
                }
        if (bad) continue;
        inv.push_back(std::abs(m[static_cast<size_t>(top)][static_cast<size_t>(top)]));
        ++top;
    }
    return inv;
}

// Is target in the row lattice spanned by (HNF) rows?
inline bool in_row_lattice(const IntMat& hnf, std::vector<long long> target) {
    for (const auto& row : hnf) {
        int lead = -1;
        for (int j = 0; j < static_cast<int>(row.size()); ++j)
            if (row[static_cast<size_t>(j)] != 0) {
                lead = j;
                break;
            }
        if (lead < 0) continue;
        long long p = row[static_cast<size_t>(lead)];
        long long t = target[static_cast<size_t>(lead)];
        if (t % p != 0) return false;
        long long q = t / p;
        for (size_t j = 0; j < row.size(); ++j) target[j] -= q * row[j];
    }
    for (long long x : target)
        if (x != 0) return false;
    return true;
}

} // namespace intlin

// --- CW model ---------------------------------------------------------------
//
// Cell structure of the closed surface of a diagram: zeros as 0-cells, the E
// saddle connections as 1-cells, plus one vertical arc delta_i across each
// cylinder (from the start vertex of its bottom word to the start vertex of
// its top word), and one 2-cell per cylinder.  Cutting cylinder i along
// delta_i attaches its 2-cell along bottom word + delta - top word - delta,
// so the boundary is (sum of bottom edges) - (sum of top edges).

struct HomologyModel {
    int V = 0, E = 0, k = 0;
    std::vector<int> vertex_of_label; // label -> zero index (its left endpoint)
    IntMat d1;                        // V x (E + k)
    IntMat d2;                        // (E + k) x k
    int rank_h1 = 0;                  // asserted equal to 2 * genus
};

inline HomologyModel homology_model(const CylinderDiagram& d) {
    auto ix = index_diagram(d);
    auto zeros = diagram_zeros(d);
    HomologyModel hm;
    hm.E = ix.E;
    hm.k = d.num_cylinders();
    hm.V = static_cast<int>(zeros.size());
    hm.vertex_of_label.assign(static_cast<size_t>(hm.E), -1);
    for (size_t z = 0; z < zeros.size(); ++z)
        for (int lab : zeros[z]) hm.vertex_of_label[static_cast<size_t>(lab)] = static_cast<int>(z);

    hm.d1.assign(static_cast<size_t>(hm.V), std::vector<long long>(static_cast<size_t>(hm.E + hm.k), 0));
    for (int x = 0; x < hm.E; ++x) {
        int left = hm.vertex_of_label[static_cast<size_t>(x)];
        int right = hm.vertex_of_label[static_cast<size_t>(ix.bottom_next[static_cast<size_t>(x)])];
        hm.d1[static_cast<size_t>(right)][static_cast<size_t>(x)] += 1;
        hm.d1[static_cast<size_t>(left)][static_cast<size_t>(x)] -= 1;
    }
    for (int ci = 0; ci < hm.k; ++ci) {
        int from = hm.vertex_of_label[static_cast<size_t>(d.cylinders[static_cast<size_t>(ci)].bottom.front())];
        int to = hm.vertex_of_label[static_cast<size_t>(d.cylinders[static_cast<size_t>(ci)].top.front())];
        hm.d1[static_cast<size_t>(to)][static_cast<size_t>(hm.E + ci)] += 1;
        hm.d1[static_cast<size_t>(from)][static_cast<size_t>(hm.E + ci)] -= 1;
    }

    hm.d2.assign(static_cast<size_t>(hm.E + hm.k), std::vector<long long>(static_cast<size_t>(hm.k), 0));
    for (int ci = 0; ci < hm.k; ++ci) {
        for (int x : d.cylinders[static_cast<size_t>(ci)].bottom) hm.d2[static_cast<size_t>(x)][static_cast<size_t>(ci)] += 1;
        for (int x : d.cylinders[static_cast<size_t>(ci)].top) hm.d2[static_cast<size_t>(x)][static_cast<size_t>(ci)] -= 1;
    }

    // chi = V - (E + k) + k = V - E must equal 2 - 2g (marked points are
    // honest 0-cells, so they do not disturb the count).
    invariant(hm.V - hm.E == 2 - 2 * diagram_genus(d), "Euler characteristic of the cell model");

    // H1 = ker d1 / im d2: rank and torsion via an integer kernel basis.
    IntMat ker = intlin::kernel_basis(hm.d1); // rows span ker d1
    // Solve ker^T * M = d2 for M (each d2 column is a kernel element).
    // Done exactly by row-reducing [ker^T | d2] over Q via integer ops: here
    // we only need rank(im d2 inside ker) and the invariant factors, which
    // equal those of d2 itself written in any basis of ker; use the matrix of
    // coordinates obtained from HNF solving.
    // Simpler: torsion of H1 equals the nontrivial invariant factors of d2
    // (since im d2 is contained in the saturated sublattice ker d1, the SNF
    // of the coordinate matrix of d2 in a kernel basis has the same nonzero
    // invariant factors as snf(coordinates)).  We compute the coordinate
    // matrix honestly below.
    int kerdim = intlin::rows(ker);
    // coords: solve x * ker = column^T  ->  use HNF of ker with tracking.
    // Build matrix of d2 columns expressed in the kernel basis by Gaussian
    // elimination over the rationals with exact bookkeeping: since ker is a
    // basis of a saturated lattice and the columns lie inside it, the
    // coordinates are integers.
    IntMat coords; // one row per d2 column, kerdim entries
    {
        // Row-reduce ker (rows) to echelon with a transform, then express.
        IntMat work = ker;
        IntMat trans(static_cast<size_t>(kerdim), std::vector<long long>(static_cast<size_t>(kerdim), 0));
        for (int i = 0; i < kerdim; ++i) trans[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        int C = hm.E + hm.k;
        std::vector<int> pivot_col;
        int prow = 0;
        for (int col = 0; col < C && prow < kerdim; ++col) {
            while (true) {
                int piv = -1;
                for (int i = prow; i < kerdim; ++i)
                    if (work[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0 &&
                        (piv < 0 || std::abs(work[static_cast<size_t>(i)][static_cast<size_t>(col)]) <
                                        std::abs(work[static_cast<size_t>(piv)][static_cast<size_t>(col)])))
                        piv = i;
                if (piv < 0) break;
                std::swap(work[static_cast<size_t>(prow)], work[static_cast<size_t>(piv)]);
                std::swap(trans[static_cast<size_t>(prow)], trans[static_cast<size_t>(piv)]);
                bool clean = true;
                for (int i = prow + 1; i < kerdim; ++i) {
                    long long q = work[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                                  work[static_cast<size_t>(prow)][static_cast<size_t>(col)];
                    if (q != 0) {
                        for (int j = 0; j < C; ++j)
                            work[static_cast<size_t>(i)][static_cast<size_t>(j)] -= q * work[static_cast<size_t>(prow)][static_cast<size_t>(j)];
                        for (int j = 0; j < kerdim; ++j)
                            trans[static_cast<size_t>(i)][static_cast<size_t>(j)] -= q * trans[static_cast<size_t>(prow)][static_cast<size_t>(j)];
                    }
                    if (work[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) clean = false;
                }
                if (clean) break;
            }
            if (work[static_cast<size_t>(prow)][static_cast<size_t>(col)] != 0) {
                pivot_col.push_back(col);
                ++prow;
            }
        }
        invariant(prow == kerdim, "kernel basis rows must be independent");
        for (int cj = 0; cj < hm.k; ++cj) {
            std::vector<long long> target(static_cast<size_t>(C));
            for (int i = 0; i < C; ++i) target[static_cast<size_t>(i)] = hm.d2[static_cast<size_t>(i)][static_cast<size_t>(cj)];
            std::vector<long long> coef(static_cast<size_t>(kerdim), 0);
            for (int i = 0; i < kerdim; ++i) {
                int pc = pivot_col[static_cast<size_t>(i)];
                long long p = work[static_cast<size_t>(i)][static_cast<size_t>(pc)];
                invariant(target[static_cast<size_t>(pc)] % p == 0,
                          "2-cell boundaries must be integral in the kernel basis");
                long long q = target[static_cast<size_t>(pc)] / p;
                if (q != 0)
                    for (int j = 0; j < C; ++j) target[static_cast<size_t>(j)] -= q * work[static_cast<size_t>(i)][static_cast<size_t>(j)];
                coef[static_cast<size_t>(i)] = q;
            }
            for (long long x : target) invariant(x == 0, "2-cell boundary must lie in ker d1");
            // coef expresses d2 column in the *echelonized* basis; convert to
            // the original kernel basis via trans: echelon rows = trans * ker.
            std::vector<long long> orig(static_cast<size_t>(kerdim), 0);
            for (int i = 0; i < kerdim; ++i)
                for (int j = 0; j < kerdim; ++j)
                    orig[static_cast<size_t>(j)] += coef[static_cast<size_t>(i)] * trans[static_cast<size_t>(i)][static_cast<size_t>(j)];
            coords.push_back(std::move(orig));
        }
    }
    auto factors = intlin::snf_invariants(coords);
    for (long long f : factors)
        invariant(f == 1, "H1 of the surface must be torsion-free");
    hm.rank_h1 = kerdim - static_cast<int>(factors.size());
    invariant(hm.rank_h1 == 2 * diagram_genus(d), "rank of H1 must equal 2g");
    return hm;
}

// --- core-curve relations ---------------------------------------------------

// Integer relation lattice {c : sum_i c_i [core_i] = 0 in H1}, presented in
// row Hermite normal form with positive leading coefficients.  The core curve
// of cylinder i is the 1-cycle given by its bottom word.
struct CoreRelations {
    IntMat gamma;     // k rows: core-curve edge chains (length E)
    IntMat relations; // HNF rows of the relation lattice in Z^k
    int rank = 0;     // rank of the span of the core classes; rank + #relations = k
};

inline CoreRelations core_curve_relations(const CylinderDiagram& d) {
    auto ix = index_diagram(d);
    int k = d.num_cylinders(), E = ix.E;
    CoreRelations cr;
    cr.gamma.assign(static_cast<size_t>(k), std::vector<long long>(static_cast<size_t>(E), 0));
    for (int ci = 0; ci < k; ++ci)
        for (int x : d.cylinders[static_cast<size_t>(ci)].bottom)
            cr.gamma[static_cast<size_t>(ci)][static_cast<size_t>(x)] += 1;

    // sum c_i gamma_i = d2 * a  for some integer a  <=>  (c, a) in ker [G^T | -D]
    // where G^T is E x k with columns gamma_i and D is the E x k matrix of
    // 2-cell boundaries restricted to edge coordinates.
    IntMat sys(static_cast<size_t>(E), std::vector<long long>(static_cast<size_t>(2 * k), 0));
    for (int x = 0; x < E; ++x)
        for (int ci = 0; ci < k; ++ci) sys[static_cast<size_t>(x)][static_cast<size_t>(ci)] = cr.gamma[static_cast<size_t>(ci)][static_cast<size_t>(x)];
    for (int ci = 0; ci < k; ++ci) {
        for (int x : d.cylinders[static_cast<size_t>(ci)].bottom) sys[static_cast<size_t>(x)][static_cast<size_t>(k + ci)] -= 1;
        for (int x : d.cylinders[static_cast<size_t>(ci)].top) sys[static_cast<size_t>(x)][static_cast<size_t>(k + ci)] += 1;
    }
    IntMat ker = intlin::kernel_basis(sys);
    IntMat cpart;
    for (const auto& row : ker) cpart.push_back(std::vector<long long>(row.begin(), row.begin() + k));
    cr.relations = intlin::row_hnf(cpart);
    cr.rank = k - intlin::rows(cr.relations);
    return cr;
}

// Pairs (i, j, sign) with [core_i] = sign * [core_j] in H1, i < j.
struct HomologousPair {
    int i = 0, j = 0, sign = 1;
};

inline std::vector<HomologousPair> homologous_pairs(const CylinderDiagram& d) {
    auto cr = core_curve_relations(d);
    int k = d.num_cylinders();
    std::vector<HomologousPair> out;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            for (int sign : {1, -1}) {
                std::vector<long long> c(static_cast<size_t>(k), 0);
                c[static_cast<size_t>(i)] = 1;
                c[static_cast<size_t>(j)] = -sign;
                if (intlin::in_row_lattice(cr.relations, c)) {
                    out.push_back({i, j, sign});
                    break; // both signs together would force a null class
                }
            }
        }
    }
    return out;
}

} // namespace flatlas
