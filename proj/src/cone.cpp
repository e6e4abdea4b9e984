#include "zonocone/cone.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "zonocone/parallel.hpp"

namespace zonocone {

// ---------------------------------------------------------------- dense Q

// Row echelon in place; returns pivot columns. Deterministic: leftmost
// column, first row with a nonzero entry.
static std::vector<int> echelon(std::vector<QVec>& m, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        int pr = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (sgn(m[i][c]) != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        Rat inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const QMatrix& m) {
    std::vector<QVec> work = m.a;
    return static_cast<int>(echelon(work, m.cols).size());
}

QMatrix kernel_basis(const QMatrix& m) {
    std::vector<QVec> work = m.a;
    std::vector<int> pivots = echelon(work, m.cols);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    QMatrix out(0, m.cols);
    for (int fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        QVec v(m.cols);
        v[fc] = 1;
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i) v[pivots[i]] = -work[i][fc];
        out.a.push_back(std::move(v));
        ++out.rows;
    }
    return out;
}

int rank_int(const std::vector<IVec>& rows) {
    if (rows.empty()) return 0;
    // fraction-free (Bareiss) elimination; entries stay exact minors
    std::vector<IVec> m;
    for (const IVec& r : rows)
        if (std::any_of(r.begin(), r.end(), [](const Int& x) { return sgn(x) != 0; }))
            m.push_back(r);
    if (m.empty()) return 0;
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    Int prev = 1;
    for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        int pr = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (sgn(m[i][c]) != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        for (int i = r + 1; i < static_cast<int>(m.size()); ++i) {
            for (int j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

// ------------------------------------------------------------- presolve

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);   // keep smallest index as root
        return true;
    }
};

}  // namespace

// Kernel basis of the sparse equality system. Two-term rows x_i = x_j are
// absorbed by union-find, single-term rows pin a class to zero; the dense
// elimination only ever sees the quotient system.
std::vector<IVec> cone_kernel_basis(const ConeH& c) {
    int n = c.ambient;
    UnionFind uf(n);
    std::vector<bool> zero_root(n, false);
    std::vector<std::map<int, Rat>> pending;
    pending.reserve(c.equalities.size());
    for (const SparseRow& row : c.equalities) {
        std::map<int, Rat> r;
        for (const auto& [col, v] : row.terms) {
            if (col < 0 || col >= n) throw std::invalid_argument("equality column out of range");
            if (sgn(v) != 0) r[col] += v;
        }
        pending.push_back(std::move(r));
    }

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::map<int, Rat>> next;
        for (auto& row : pending) {
            std::map<int, Rat> r;
            for (auto& [col, v] : row) {
                int root = uf.find(col);
                if (zero_root[root]) continue;
                Rat& slot = r[root];
                slot += v;
                if (sgn(slot) == 0) r.erase(root);
            }
            if (r.empty()) continue;
            if (r.size() == 1) {
                zero_root[r.begin()->first] = true;
                changed = true;
                continue;
            }
            if (r.size() == 2) {
                auto it = r.begin();
                auto [c1, v1] = *it++;
                auto [c2, v2] = *it;
                if (v1 == -v2) {   // x_c1 = x_c2
                    uf.merge(c1, c2);
                    changed = true;
                    continue;
                }
            }
            next.push_back(std::move(r));
        }
        pending = std::move(next);
        if (changed) {
            // zero marks may have landed on non-roots after merges; normalize
            std::vector<bool> z(n, false);
            for (int i = 0; i < n; ++i)
                if (zero_root[i]) z[uf.find(i)] = true;
            zero_root = std::move(z);
        }
    }

    // live classes -> dense variables
    std::vector<int> var_of(n, -1);
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        int root = uf.find(i);
        if (zero_root[root]) continue;
        if (var_of[root] == -1) {
            var_of[root] = static_cast<int>(roots.size());
            roots.push_back(root);
        }
    }
    int nvars = static_cast<int>(roots.size());

    QMatrix quot(static_cast<int>(pending.size()), nvars);
    for (int i = 0; i < quot.rows; ++i)
        for (const auto& [root, v] : pending[i]) quot.a[i][var_of[root]] = v;

    QMatrix kb = kernel_basis(quot);
    std::vector<IVec> out;
    out.reserve(kb.rows);
    for (const QVec& brow : kb.a) {
        QVec full(n);
        for (int i = 0; i < n; ++i) {
            int root = uf.find(i);
            if (!zero_root[root]) full[i] = brow[var_of[root]];
        }
        out.push_back(primitive_direction(full));
    }
    return out;
}

// --------------------------------------------------------- double description

namespace {

struct DDRay {
    IVec y;
    std::vector<std::uint64_t> zero;   // tight bits over processed inequalities
};

Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool subset_of(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

}  // namespace

// inequality rows of the y-space system: x_i = column i of K, deduped
static std::vector<IVec> dd_inequalities(const ConeH& c, const std::vector<IVec>& K) {
    int k = static_cast<int>(K.size());
    std::vector<IVec> B;
    std::set<IVec> seen;
    for (int i = 0; i < c.ambient; ++i) {
        IVec col(k);
        for (int r = 0; r < k; ++r) col[r] = K[r][i];
        if (std::all_of(col.begin(), col.end(), [](const Int& x) { return sgn(x) == 0; }))
            continue;
        col = primitive_direction(col);
        if (seen.insert(col).second) B.push_back(std::move(col));
    }
    return B;
}

int dd_inequality_count(const ConeH& c) {
    std::vector<IVec> K = cone_kernel_basis(c);
    if (K.empty()) return 0;
    return static_cast<int>(dd_inequalities(c, K).size());
}

RayList extreme_rays(const ConeH& c, const DDOptions& opt) {
    std::vector<IVec> K = cone_kernel_basis(c);
    int k = static_cast<int>(K.size());
    if (k == 0) return {};
    if (k > opt.max_dim)
        throw effort_cap_error("DD working dimension " + std::to_string(k) + " exceeds cap " +
                               std::to_string(opt.max_dim));

    std::vector<IVec> B = dd_inequalities(c, K);
    int nB = static_cast<int>(B.size());

    std::vector<int> order(nB);
    std::iota(order.begin(), order.end(), 0);
    bool fixed_order = !opt.insertion_order.empty();
    if (fixed_order) {
        if (static_cast<int>(opt.insertion_order.size()) != nB)
            throw std::invalid_argument("insertion_order must permute the deduped inequalities");
        order = opt.insertion_order;
    }

    // initial simplicial cone: first k independent rows in the given order
    std::vector<int> init;
    {
        std::vector<IVec> picked;
        for (int idx : order) {
            picked.push_back(B[idx]);
            if (rank_int(picked) == static_cast<int>(picked.size()))
                init.push_back(idx);
            else
                picked.pop_back();
            if (static_cast<int>(init.size()) == k) break;
        }
    }
    assert(static_cast<int>(init.size()) == k);

    std::size_t zwords = static_cast<std::size_t>(nB + 63) / 64;
    std::vector<DDRay> rays;
    {
        // rays of the initial cone: columns of the inverse of the picked rows
        std::vector<QVec> aug(k, QVec(2 * k));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) aug[i][j] = Rat(B[init[i]][j]);
            aug[i][k + i] = 1;
        }
        std::vector<int> piv = echelon(aug, 2 * k);
        assert(static_cast<int>(piv.size()) == k);
        for (int j = 0; j < k; ++j) {
            QVec col(k);
            for (int i = 0; i < k; ++i) col[i] = aug[i][k + j];
            DDRay r;
            r.y = primitive_direction(col);
            r.zero.assign(zwords, 0);
            for (int i = 0; i < k; ++i)
                if (i != j) r.zero[i >> 6] |= std::uint64_t{1} << (i & 63);
            rays.push_back(std::move(r));
        }
    }

    std::vector<bool> processed(nB, false);
    std::vector<int> processed_list = init;   // bit position in DDRay::zero == index here
    for (int idx : init) processed[idx] = true;

    int threads = thread_count(opt.threads);

    std::vector<int> queue;
    for (int idx : order)
        if (!processed[idx]) queue.push_back(idx);

    while (!queue.empty()) {
        int chosen_pos = 0;
        if (!fixed_order && queue.size() > 1) {
            // fewest currently-violated rays first; ties by inequality index
            std::vector<long> score(queue.size());
            parallel_chunks(queue.size(), threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
                for (std::size_t qi = lo; qi < hi; ++qi) {
                    long cnt = 0;
                    for (const DDRay& r : rays)
                        if (sgn(dot(B[queue[qi]], r.y)) < 0) ++cnt;
                    score[qi] = cnt;
                }
            });
            for (std::size_t qi = 1; qi < queue.size(); ++qi)
                if (score[qi] < score[chosen_pos] ||
                    (score[qi] == score[chosen_pos] && queue[qi] < queue[chosen_pos]))
                    chosen_pos = static_cast<int>(qi);
        }
        int bi = queue[chosen_pos];
        queue.erase(queue.begin() + chosen_pos);
        const IVec& b = B[bi];
        std::size_t bitpos = processed_list.size();

        std::vector<Int> dots(rays.size());
        parallel_chunks(rays.size(), threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
            for (std::size_t i = lo; i < hi; ++i) dots[i] = dot(b, rays[i].y);
        });

        std::vector<std::size_t> pos, zer, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            int s = sgn(dots[i]);
            (s > 0 ? pos : s == 0 ? zer : neg).push_back(i);
        }

        auto set_bit = [&](DDRay& r) { r.zero[bitpos >> 6] |= std::uint64_t{1} << (bitpos & 63); };

        if (neg.empty()) {
            for (std::size_t i : zer) set_bit(rays[i]);
            processed[bi] = true;
            processed_list.push_back(bi);
            continue;
        }

        // combine adjacent (positive, negative) pairs
        std::size_t npairs = pos.size() * neg.size();
        std::size_t nchunks = std::min<std::size_t>(static_cast<std::size_t>(threads) * 4, npairs);
        std::vector<std::vector<DDRay>> produced(std::max<std::size_t>(nchunks, 1));
        parallel_chunks(npairs, static_cast<int>(nchunks), [&](std::size_t lo, std::size_t hi,
                                                               std::size_t chunk) {
            std::vector<std::uint64_t> z(zwords);
            for (std::size_t pi = lo; pi < hi; ++pi) {
                const DDRay& rp = rays[pos[pi / neg.size()]];
                const DDRay& rm = rays[neg[pi % neg.size()]];
                for (std::size_t w = 0; w < zwords; ++w) z[w] = rp.zero[w] & rm.zero[w];
                bool adjacent = true;
                for (const DDRay& other : rays) {
                    if (&other == &rp || &other == &rm) continue;
                    if (subset_of(z, other.zero)) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                const Int& vp = dots[pos[pi / neg.size()]];
                const Int& vm = dots[neg[pi % neg.size()]];
                IVec y(k);
                for (int t = 0; t < k; ++t) y[t] = vp * rm.y[t] - vm * rp.y[t];
                DDRay nr;
                nr.y = primitive_direction(y);
                nr.zero = z;
                set_bit(nr);
                produced[chunk].push_back(std::move(nr));
            }
        });

        std::vector<DDRay> next;
        next.reserve(pos.size() + zer.size());
        for (std::size_t i : pos) next.push_back(std::move(rays[i]));
        for (std::size_t i : zer) {
            set_bit(rays[i]);
            next.push_back(std::move(rays[i]));
        }
        for (auto& chunk : produced)
            for (auto& r : chunk) next.push_back(std::move(r));
        rays = std::move(next);
        if (rays.size() > opt.max_rays)
            throw effort_cap_error("DD intermediate ray count " + std::to_string(rays.size()) +
                                   " exceeds cap");
        processed[bi] = true;
        processed_list.push_back(bi);
    }

    // back to ambient coordinates
    RayList out;
    out.rays.reserve(rays.size());
    for (const DDRay& r : rays) {
        IVec x(c.ambient);
        for (int i = 0; i < c.ambient; ++i) {
            Int s = 0;
            for (int t = 0; t < k; ++t) s += K[t][i] * r.y[t];
            assert(sgn(s) >= 0);
            x[i] = std::move(s);
        }
        out.rays.push_back(primitive_direction(x));
    }
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

int cone_dimension(const RayList& rays) { return rank_int(rays.rays); }

int cone_dimension(const ConeH& c, const DDOptions& opt) {
    return cone_dimension(extreme_rays(c, opt));
}

// ------------------------------------------------------ faces from rays

namespace {

using Mask = std::vector<std::uint64_t>;

Mask tight_mask(const std::vector<IVec>& rays, int coord, std::size_t words) {
    Mask m(words, 0);
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (sgn(rays[i][coord]) == 0) m[i >> 6] |= std::uint64_t{1} << (i & 63);
    return m;
}

int mask_rank(const std::vector<IVec>& rays, const Mask& m) {
    std::vector<IVec> sel;
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (m[i >> 6] >> (i & 63) & 1) sel.push_back(rays[i]);
    return rank_int(sel);
}

}  // namespace

int facet_count(const ConeH& c, const RayList& rl) {
    if (rl.rays.empty()) return 0;
    int dim = cone_dimension(rl);
    std::size_t nr = rl.rays.size();
    std::size_t words = (nr + 63) / 64;
    Mask full(words, 0);
    for (std::size_t i = 0; i < nr; ++i) full[i >> 6] |= std::uint64_t{1} << (i & 63);
    std::set<Mask> candidates;
    for (int coord = 0; coord < c.ambient; ++coord) {
        Mask m = tight_mask(rl.rays, coord, words);
        if (m == full) continue;   // implied equality, not a facet
        candidates.insert(std::move(m));
    }
    int count = 0;
    for (const Mask& m : candidates)
        if (mask_rank(rl.rays, m) == dim - 1) ++count;
    return count;
}

std::vector<long> f_vector(const ConeH& c, const RayList& rl, int max_rays) {
    int n = static_cast<int>(rl.rays.size());
    if (n == 0) return {};
    if (n > max_rays || n > 64)
        throw effort_cap_error("f_vector ray count " + std::to_string(n) + " exceeds cap");
    int dim = cone_dimension(rl);
    std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    std::set<std::uint64_t> facet_masks;
    std::unordered_map<std::uint64_t, int> rank_memo;
    auto mrank = [&](std::uint64_t m) {
        auto it = rank_memo.find(m);
        if (it != rank_memo.end()) return it->second;
        std::vector<IVec> sel;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) sel.push_back(rl.rays[i]);
        int r = rank_int(sel);
        rank_memo.emplace(m, r);
        return r;
    };
    {
        std::set<std::uint64_t> cand;
        for (int coord = 0; coord < c.ambient; ++coord) {
            std::uint64_t m = 0;
            for (int i = 0; i < n; ++i)
                if (sgn(rl.rays[i][coord]) == 0) m |= std::uint64_t{1} << i;
            if (m != full) cand.insert(m);
        }
        for (std::uint64_t m : cand)
            if (mrank(m) == dim - 1) facet_masks.insert(m);
    }

    // faces = closure of the facet masks under intersection, plus the cone
    std::set<std::uint64_t> faces{full};
    std::vector<std::uint64_t> frontier{full};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t f : frontier)
            for (std::uint64_t m : facet_masks) {
                std::uint64_t x = f & m;
                if (faces.insert(x).second) next.push_back(x);
            }
        frontier = std::move(next);
    }

    std::vector<long> fv(dim + 1, 0);
    for (std::uint64_t f : faces) {
        if (f == 0) continue;   // apex
        ++fv[mrank(f)];
    }
    return {fv.begin() + 1, fv.end()};
}

}  // namespace zonocone
