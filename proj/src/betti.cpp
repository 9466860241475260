#include "ndp/betti.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ndp {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

bool lattice_order(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
}

} // namespace

int LcmLattice::index_of(const Monomial& m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m, lattice_order);
    if (it != elements.end() && *it == m)
        return static_cast<int>(it - elements.begin());
    return -1;
}

bool LcmLattice::strictly_divides(int a, int b) const {
    if (degrees_[static_cast<std::size_t>(a)] >= degrees_[static_cast<std::size_t>(b)])
        return false;
    const int* ea = flat_exps_.data() + static_cast<std::size_t>(a) * nvars;
    const int* eb = flat_exps_.data() + static_cast<std::size_t>(b) * nvars;
    for (int i = 0; i < nvars; ++i)
        if (ea[i] > eb[i]) return false;
    return true;
}

LcmLattice lcm_lattice(const MonomialIdeal& I, std::size_t max_lattice) {
    if (I.is_zero() || I.is_unit())
        throw PreconditionError("lcm_lattice requires a proper nonzero ideal");
    const int n = I.nvars();

    std::unordered_map<std::vector<int>, int, VecHash> seen;
    std::vector<std::vector<int>> elems;
    auto insert = [&](const std::vector<int>& e) -> bool {
        auto [it, fresh] = seen.emplace(e, static_cast<int>(elems.size()));
        if (fresh) {
            elems.push_back(e);
            if (elems.size() > max_lattice)
                throw BudgetExceededError("lcm lattice exceeds cap of " +
                                          std::to_string(max_lattice) + " elements");
        }
        return fresh;
    };

    insert(std::vector<int>(static_cast<std::size_t>(n), 0)); // bottom
    const auto& gens = I.generators();
    for (const Monomial& g : gens) insert(g.exponents());

    // join closure: joining with atoms repeatedly reaches every subset lcm
    std::size_t head = 0;
    while (head < elems.size()) {
        std::vector<int> e = elems[head++];
        for (const Monomial& g : gens) {
            std::vector<int> j(e);
            bool grew = false;
            for (int i = 0; i < n; ++i)
                if (g.exponent(i) > j[static_cast<std::size_t>(i)]) {
                    j[static_cast<std::size_t>(i)] = g.exponent(i);
                    grew = true;
                }
            if (grew) insert(j);
        }
    }

    LcmLattice L;
    L.nvars = n;
    L.elements.reserve(elems.size());
    for (auto& e : elems) L.elements.emplace_back(std::move(e));
    std::sort(L.elements.begin(), L.elements.end(), lattice_order);

    L.flat_exps_.resize(L.elements.size() * static_cast<std::size_t>(n));
    L.degrees_.resize(L.elements.size());
    for (std::size_t k = 0; k < L.elements.size(); ++k) {
        L.degrees_[k] = L.elements[k].degree();
        for (int i = 0; i < n; ++i)
            L.flat_exps_[k * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
                L.elements[k].exponent(i);
    }
    for (const Monomial& g : gens) L.atom_ids.push_back(L.index_of(g));
    return L;
}

// ---------------------------------------------------------------------------
// shared homology machinery
// ---------------------------------------------------------------------------

namespace {

// Faces of one simplicial complex: dims[k] holds the (k+1)-element faces,
// flattened, vertices ascending within a face, faces in lex order.
struct FaceSet {
    std::vector<std::vector<std::int32_t>> dims;

    std::size_t count(int k) const {
        if (k < 0 || k >= static_cast<int>(dims.size())) return 0;
        return dims[static_cast<std::size_t>(k)].size() / static_cast<std::size_t>(k + 1);
    }
};

// Lookup structure for faces of one dimension: faces are lex-sorted in the
// flattened array, so a binary search finds ordinals; for up to four
// vertices the ids (always < 2^16 here, the vertex count is capped by the
// lattice budget) pack into one word, which keeps the search cache-friendly.
class FaceLookup {
public:
    FaceLookup(const FaceSet& fs, int k) : flat_(&fs.dims[static_cast<std::size_t>(k)]),
                                           w_(static_cast<std::size_t>(k + 1)) {
        if (w_ <= 4) {
            packed_.reserve(flat_->size() / w_);
            for (std::size_t f = 0; f * w_ < flat_->size(); ++f)
                packed_.push_back(pack(flat_->data() + f * w_));
        }
    }

    std::int32_t at(const std::int32_t* face) const {
        if (!packed_.empty() || flat_->empty()) {
            auto it = std::lower_bound(packed_.begin(), packed_.end(), pack(face));
            return static_cast<std::int32_t>(it - packed_.begin());
        }
        std::size_t lo = 0, hi = flat_->size() / w_;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            const std::int32_t* cand = flat_->data() + mid * w_;
            if (std::lexicographical_compare(cand, cand + w_, face, face + w_))
                lo = mid + 1;
            else
                hi = mid;
        }
        return static_cast<std::int32_t>(lo);
    }

private:
    std::uint64_t pack(const std::int32_t* face) const {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < w_; ++i)
            key = (key << 16) | static_cast<std::uint16_t>(face[i]);
        return key;
    }

    const std::vector<std::int32_t>* flat_;
    std::size_t w_;
    std::vector<std::uint64_t> packed_;
};

// Betti rows 0..smax of the reduced homology of the complex:
// row s = dim H~_{s-1}.
//
// Before any linear algebra the complex is shrunk by unit-pivot
// eliminations: collapse pairs (a face with exactly one live coface) and
// coreduction pairs (a face with exactly one live facet, seeded through the
// empty face).  Both preserve every homology rank over any coefficients,
// with boundaries restricted to the surviving cells.  The survivors rarely
// number more than a few percent of the input.  Row 1 of the survivor
// complex goes through union-find (the restricted incidence matrix has rank
// V - #ungrounded components); rows >= 2 go through exact boundary ranks.
std::vector<long long> homology_rows(const FaceSet& fs, int smax, const Field& field) {
    std::vector<long long> rows(static_cast<std::size_t>(smax) + 1, 0);
    const std::size_t V = fs.count(0);
    rows[0] = (V == 0) ? 1 : 0;
    if (smax == 0 || V == 0) return rows;

    int top = 0;
    while (top < smax && fs.count(top + 1) > 0) ++top;

    if (smax == 1) { // connectivity only: no face tables needed
        std::vector<std::int32_t> parent(V);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::int32_t x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        if (top >= 1) {
            const auto& edges = fs.dims[1];
            for (std::size_t e = 0; 2 * e + 1 < edges.size(); ++e) {
                std::int32_t a = find(edges[2 * e]), b = find(edges[2 * e + 1]);
                if (a != b) parent[static_cast<std::size_t>(b)] = a;
            }
        }
        long long comps = 0;
        for (std::size_t v = 0; v < V; ++v)
            if (find(static_cast<std::int32_t>(v)) == static_cast<std::int32_t>(v)) ++comps;
        rows[1] = comps - 1;
        return rows;
    }

    // facet id tables: facets[k][f*(k+1)+j] = index of face f minus vertex j
    std::vector<std::vector<std::int32_t>> facets(static_cast<std::size_t>(top) + 1);
    {
        std::vector<std::int32_t> sub;
        for (int k = 1; k <= top; ++k) {
            FaceLookup below(fs, k - 1);
            const auto& flat = fs.dims[static_cast<std::size_t>(k)];
            const std::size_t w = static_cast<std::size_t>(k + 1);
            auto& out = facets[static_cast<std::size_t>(k)];
            out.resize(flat.size());
            sub.resize(w - 1);
            for (std::size_t f = 0; f * w < flat.size(); ++f) {
                const std::int32_t* face = flat.data() + f * w;
                for (std::size_t j = 0; j < w; ++j) {
                    std::size_t t = 0;
                    for (std::size_t i = 0; i < w; ++i)
                        if (i != j) sub[t++] = face[i];
                    out[f * w + j] = below.at(sub.data());
                }
            }
        }
    }

    // coface lists (transposed facet tables)
    std::vector<std::vector<std::int32_t>> coface_start(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<std::int32_t>> coface_data(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<std::int32_t>> cofacet_count(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k < top; ++k) {
        const std::size_t nk = fs.count(k);
        auto& counts = cofacet_count[static_cast<std::size_t>(k)];
        counts.assign(nk, 0);
        const auto& fac = facets[static_cast<std::size_t>(k + 1)];
        for (std::int32_t g : fac) ++counts[static_cast<std::size_t>(g)];
        auto& start = coface_start[static_cast<std::size_t>(k)];
        start.assign(nk + 1, 0);
        for (std::size_t i = 0; i < nk; ++i)
            start[i + 1] = start[i] + counts[i];
        auto& data = coface_data[static_cast<std::size_t>(k)];
        data.resize(fac.size());
        std::vector<std::int32_t> cursor(start.begin(), start.end() - 1);
        const std::size_t w = static_cast<std::size_t>(k + 2);
        for (std::size_t f = 0; f * w < fac.size(); ++f)
            for (std::size_t j = 0; j < w; ++j) {
                std::int32_t g = fac[f * w + j];
                data[static_cast<std::size_t>(cursor[static_cast<std::size_t>(g)]++)] =
                    static_cast<std::int32_t>(f);
            }
    }
    cofacet_count[static_cast<std::size_t>(top)].assign(fs.count(top), 0);

    // live facet counts; the empty face gives every vertex one facet
    std::vector<std::vector<std::int32_t>> facet_count(static_cast<std::size_t>(top) + 1);
    facet_count[0].assign(V, 1);
    for (int k = 1; k <= top; ++k)
        facet_count[static_cast<std::size_t>(k)].assign(fs.count(k),
                                                        static_cast<std::int32_t>(k) + 1);
    bool empty_alive = true;

    std::vector<std::vector<char>> alive(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k)
        alive[static_cast<std::size_t>(k)].assign(fs.count(k), 1);

    {
        std::vector<std::pair<std::int32_t, std::int32_t>> queue; // (dim, face)
        for (int k = top; k >= 0; --k)
            for (std::size_t i = 0; i < fs.count(k); ++i)
                queue.emplace_back(k, static_cast<std::int32_t>(i));

        auto is_alive = [&](int k, std::int32_t f) {
            return alive[static_cast<std::size_t>(k)][static_cast<std::size_t>(f)] != 0;
        };
        // removing a cell updates both neighbour counts and requeues
        auto remove_cell = [&](int k, std::int32_t f) {
            alive[static_cast<std::size_t>(k)][static_cast<std::size_t>(f)] = 0;
            if (k < top) {
                const auto& start = coface_start[static_cast<std::size_t>(k)];
                const auto& data = coface_data[static_cast<std::size_t>(k)];
                for (std::int32_t c = start[static_cast<std::size_t>(f)];
                     c < start[static_cast<std::size_t>(f) + 1]; ++c) {
                    std::int32_t rho = data[static_cast<std::size_t>(c)];
                    if (!is_alive(k + 1, rho)) continue;
                    if (--facet_count[static_cast<std::size_t>(k + 1)]
                                     [static_cast<std::size_t>(rho)] == 1)
                        queue.emplace_back(k + 1, rho);
                }
            }
            if (k >= 1) {
                const std::size_t w = static_cast<std::size_t>(k + 1);
                const auto& fac = facets[static_cast<std::size_t>(k)];
                for (std::size_t j = 0; j < w; ++j) {
                    std::int32_t g = fac[static_cast<std::size_t>(f) * w + j];
                    if (!is_alive(k - 1, g)) continue;
                    if (--cofacet_count[static_cast<std::size_t>(k - 1)]
                                       [static_cast<std::size_t>(g)] == 1)
                        queue.emplace_back(k - 1, g);
                }
            }
        };

        while (!queue.empty()) {
            auto [k, i] = queue.back();
            queue.pop_back();
            if (!is_alive(k, i)) continue;

            // coreduction: i has exactly one live facet
            std::int32_t fcount = (k == 0) ? (empty_alive ? 1 : 0)
                                           : facet_count[static_cast<std::size_t>(k)]
                                                        [static_cast<std::size_t>(i)];
            if (fcount == 1) {
                if (k == 0) {
                    empty_alive = false;
                    remove_cell(0, i);
                } else {
                    const std::size_t w = static_cast<std::size_t>(k + 1);
                    const auto& fac = facets[static_cast<std::size_t>(k)];
                    std::int32_t sigma = -1;
                    for (std::size_t j = 0; j < w; ++j) {
                        std::int32_t g = fac[static_cast<std::size_t>(i) * w + j];
                        if (is_alive(k - 1, g)) {
                            sigma = g;
                            break;
                        }
                    }
                    remove_cell(k, i);
                    if (sigma >= 0) remove_cell(k - 1, sigma);
                }
                continue;
            }

            // collapse: i has exactly one live cofacet
            if (k < top &&
                cofacet_count[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] ==
                    1) {
                const auto& start = coface_start[static_cast<std::size_t>(k)];
                const auto& data = coface_data[static_cast<std::size_t>(k)];
                std::int32_t tau = -1;
                for (std::int32_t c = start[static_cast<std::size_t>(i)];
                     c < start[static_cast<std::size_t>(i) + 1]; ++c) {
                    std::int32_t cand = data[static_cast<std::size_t>(c)];
                    if (is_alive(k + 1, cand)) {
                        tau = cand;
                        break;
                    }
                }
                if (tau >= 0) {
                    remove_cell(k + 1, tau);
                    remove_cell(k, i);
                }
            }
        }
    }

    auto alive_count = [&](int k) -> std::size_t {
        if (k < 0 || k > top) return 0;
        const auto& a = alive[static_cast<std::size_t>(k)];
        return static_cast<std::size_t>(std::count(a.begin(), a.end(), char(1)));
    };

    const std::size_t Va = alive_count(0);
    const long long rank_d0 = (empty_alive && Va > 0) ? 1 : 0;

    // restricted incidence rank: union-find with a ground node for edges
    // that lost an endpoint
    long long rank_d1 = 0;
    if (top >= 1) {
        const std::size_t ground = fs.count(0);
        std::vector<std::int32_t> parent(fs.count(0) + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::int32_t x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        const auto& edges = fs.dims[1];
        for (std::size_t e = 0; 2 * e + 1 < edges.size(); ++e) {
            if (!alive[1][e]) continue;
            std::int32_t u = edges[2 * e], v = edges[2 * e + 1];
            bool ua = alive[0][static_cast<std::size_t>(u)] != 0;
            bool va = alive[0][static_cast<std::size_t>(v)] != 0;
            if (!ua && !va) continue;
            if (!ua) u = static_cast<std::int32_t>(ground);
            if (!va) v = static_cast<std::int32_t>(ground);
            std::int32_t a = find(u), b = find(v);
            if (a != b) parent[static_cast<std::size_t>(b)] = a;
        }
        std::int32_t ground_root = find(static_cast<std::int32_t>(ground));
        long long ungrounded = 0;
        for (std::size_t v = 0; v < fs.count(0); ++v)
            if (alive[0][v]) {
                std::int32_t r = find(static_cast<std::int32_t>(v));
                if (r == static_cast<std::int32_t>(v) && r != ground_root) ++ungrounded;
            }
        // a grounded root may coincide with the ground node only via edges
        rank_d1 = static_cast<long long>(Va) - ungrounded;
    }

    rows[0] = (empty_alive ? 1 : 0) - rank_d0;
    rows[1] = static_cast<long long>(Va) - rank_d0 - rank_d1;

    long long rank_prev = rank_d1;
    for (int s = 2; s <= smax; ++s) {
        // reductions can leave gaps, so no early break on an empty level
        const std::size_t c_below = alive_count(s - 1);
        const std::size_t c_here = alive_count(s);
        long long rank_s = 0;
        if (c_here > 0) {
            std::vector<std::int32_t> colid(fs.count(s - 1), -1);
            std::int32_t next = 0;
            for (std::size_t i = 0; i < fs.count(s - 1); ++i)
                if (alive[static_cast<std::size_t>(s - 1)][i])
                    colid[i] = next++;
            SparseIntMatrix mat;
            mat.cols = static_cast<int>(c_below);
            mat.rows.reserve(c_here);
            const std::size_t w = static_cast<std::size_t>(s + 1);
            const auto& fac = facets[static_cast<std::size_t>(s)];
            for (std::size_t f = 0; f * w < fac.size(); ++f) {
                if (!alive[static_cast<std::size_t>(s)][f]) continue;
                std::vector<std::pair<std::int32_t, std::int32_t>> row;
                row.reserve(w);
                for (std::size_t j = 0; j < w; ++j) {
                    std::int32_t g = fac[f * w + j];
                    std::int32_t col = colid[static_cast<std::size_t>(g)];
                    if (col < 0) continue; // facet eliminated by a reduction
                    row.emplace_back(col, (j % 2 == 0) ? 1 : -1);
                }
                std::sort(row.begin(), row.end());
                mat.add_row(std::move(row));
            }
            rank_s = rank_over(mat, field);
        }
        rows[static_cast<std::size_t>(s)] =
            static_cast<long long>(c_below) - rank_prev - rank_s;
        rank_prev = rank_s;
    }
    return rows;
}


// All chains with at most max_len elements in the divisibility order on the
// given vertices; succ lists must be ascending.
FaceSet enumerate_chains(const std::vector<std::vector<std::int32_t>>& succ, int max_len,
                         std::size_t max_faces) {
    FaceSet fs;
    fs.dims.resize(static_cast<std::size_t>(max_len));
    std::size_t total = 0;
    std::vector<std::int32_t> path;
    auto extend = [&](auto&& self, std::int32_t v) -> void {
        path.push_back(v);
        auto& flat = fs.dims[path.size() - 1];
        flat.insert(flat.end(), path.begin(), path.end());
        if (++total > max_faces)
            throw BudgetExceededError("order complex exceeds face budget of " +
                                      std::to_string(max_faces));
        if (static_cast<int>(path.size()) < max_len)
            for (std::int32_t w : succ[static_cast<std::size_t>(v)]) self(self, w);
        path.pop_back();
    };
    for (std::int32_t v = 0; v < static_cast<std::int32_t>(succ.size()); ++v)
        extend(extend, v);
    return fs;
}

// All generator subsets whose lcm strictly divides the target multidegree,
// with at most max_size elements.  Once a subset's lcm reaches the target,
// every superset does too, so that branch is pruned.
FaceSet enumerate_strand(const std::vector<const Monomial*>& verts, const Monomial& target,
                         int max_size, std::size_t max_faces) {
    FaceSet fs;
    fs.dims.resize(static_cast<std::size_t>(max_size));
    std::size_t total = 0;
    const int n = target.nvars();
    std::vector<std::int32_t> path;
    std::vector<std::vector<int>> lcm_stack; // running lcm exponents per depth
    lcm_stack.emplace_back(static_cast<std::size_t>(n), 0);

    auto extend = [&](auto&& self, std::int32_t v) -> void {
        const std::vector<int>& cur = lcm_stack[path.size()];
        std::vector<int> next(cur);
        int deg = 0;
        for (int i = 0; i < n; ++i) {
            next[static_cast<std::size_t>(i)] =
                std::max(next[static_cast<std::size_t>(i)],
                         verts[static_cast<std::size_t>(v)]->exponent(i));
            deg += next[static_cast<std::size_t>(i)];
        }
        if (deg == target.degree()) return; // lcm hit the target: not a face
        path.push_back(v);
        auto& flat = fs.dims[path.size() - 1];
        flat.insert(flat.end(), path.begin(), path.end());
        if (++total > max_faces)
            throw BudgetExceededError("strand complex exceeds face budget of " +
                                      std::to_string(max_faces));
        if (static_cast<int>(path.size()) < max_size) {
            lcm_stack.push_back(std::move(next));
            for (std::int32_t w = v + 1; w < static_cast<std::int32_t>(verts.size()); ++w)
                self(self, w);
            lcm_stack.pop_back();
        }
        path.pop_back();
    };
    for (std::int32_t v = 0; v < static_cast<std::int32_t>(verts.size()); ++v)
        extend(extend, v);
    return fs;
}


void graded_kernel(const LcmLattice& L, int mi, int smax, const OracleOptions& opts,
                   std::vector<BettiEntry>& out) {
    std::vector<std::int32_t> interval; // global ids, ascending = degree-sorted
    for (int e = 1; e < mi; ++e)
        if (L.strictly_divides(e, mi)) interval.push_back(e);

    if (interval.empty()) { // atom
        out.push_back({0, L.elements[static_cast<std::size_t>(mi)], 1});
        return;
    }
    const std::size_t E = interval.size();
    std::vector<std::vector<std::int32_t>> succ(E);
    for (std::size_t a = 0; a < E; ++a)
        for (std::size_t b = a + 1; b < E; ++b)
            if (L.strictly_divides(interval[a], interval[b]))
                succ[a].push_back(static_cast<std::int32_t>(b));

    FaceSet faces = enumerate_chains(succ, smax + 1, opts.max_faces);
    std::vector<long long> rows = homology_rows(faces, smax, opts.field);
    for (int s = 1; s <= smax; ++s)
        if (rows[static_cast<std::size_t>(s)] != 0)
            out.push_back({s, L.elements[static_cast<std::size_t>(mi)],
                           rows[static_cast<std::size_t>(s)]});
}

void strand_kernel(const LcmLattice& L, const std::vector<Monomial>& gens, int mi, int smax,
                   const OracleOptions& opts, std::vector<BettiEntry>& out) {
    const Monomial& m = L.elements[static_cast<std::size_t>(mi)];
    std::vector<const Monomial*> verts;
    for (const Monomial& g : gens)
        if (divides(g, m)) verts.push_back(&g);

    FaceSet faces = enumerate_strand(verts, m, smax + 1, opts.max_faces);
    std::vector<long long> rows = homology_rows(faces, smax, opts.field);
    for (int s = 0; s <= smax; ++s)
        if (rows[static_cast<std::size_t>(s)] != 0)
            out.push_back({s, m, rows[static_cast<std::size_t>(s)]});
}

void sort_entries(std::vector<BettiEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
        if (a.row != b.row) return a.row < b.row;
        return lattice_order(a.multidegree, b.multidegree);
    });
}

BettiTable betti_impl(const MonomialIdeal& I, const OracleOptions& opts, bool strand,
                      bool parallel) {
    if (opts.max_row < 0) throw PreconditionError("max_row must be >= 0");
    if (I.is_zero()) return BettiTable({}, opts.field.id(), opts.max_row);
    if (I.is_unit())
        return BettiTable({{0, Monomial::one(I.nvars()), 1}}, opts.field.id(), opts.max_row);
    if (!opts.field.rational) Field::fp(opts.field.prime); // validate

    const LcmLattice L = lcm_lattice(I, opts.max_lattice);
    // beta_s(I) = beta_{s+1}(S/I) vanishes for s >= nvars
    const int smax = std::min(opts.max_row, I.nvars() - 1);
    const int size = L.size();
    std::vector<BettiEntry> entries;

    auto run_one = [&](int mi, std::vector<BettiEntry>& sink) {
        if (strand)
            strand_kernel(L, I.generators(), mi, smax, opts, sink);
        else
            graded_kernel(L, mi, smax, opts, sink);
    };

#ifdef _OPENMP
    if (parallel) {
        const int nt = opts.threads > 0 ? opts.threads : omp_get_max_threads();
        std::exception_ptr err = nullptr;
        std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic) num_threads(nt)
        for (int mi = 1; mi < size; ++mi) {
            if (failed.load(std::memory_order_relaxed)) continue;
            std::vector<BettiEntry> local;
            try {
                run_one(mi, local);
            } catch (...) {
#pragma omp critical(ndp_betti_err)
                {
                    if (!err) err = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
                continue;
            }
#pragma omp critical(ndp_betti_merge)
            entries.insert(entries.end(), local.begin(), local.end());
        }
        if (err) std::rethrow_exception(err);
    } else
#else
    (void)parallel;
#endif
    {
        for (int mi = 1; mi < size; ++mi) run_one(mi, entries);
    }

    sort_entries(entries);
    return BettiTable(std::move(entries), opts.field.id(), opts.max_row);
}

} // namespace

BettiTable::BettiTable(std::vector<BettiEntry> entries, std::string field_id, int rows_computed)
    : entries_(std::move(entries)), field_id_(std::move(field_id)),
      rows_computed_(rows_computed) {}

std::optional<int> BettiTable::t(int s) const {
    if (s < 0 || s > rows_computed_)
        throw PreconditionError("t_s requested beyond the computed rows");
    std::optional<int> best;
    for (const auto& e : entries_)
        if (e.row == s && (!best || e.multidegree.degree() > *best))
            best = e.multidegree.degree();
    return best;
}

long long BettiTable::total(int row) const {
    long long sum = 0;
    for (const auto& e : entries_)
        if (e.row == row) sum += e.rank;
    return sum;
}

std::map<std::pair<int, int>, long long> BettiTable::by_total_degree() const {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& e : entries_) out[{e.row, e.multidegree.degree()}] += e.rank;
    return out;
}

int BettiTable::max_row_present() const {
    int m = -1;
    for (const auto& e : entries_) m = std::max(m, e.row);
    return m;
}

BettiTable graded_betti(const MonomialIdeal& I, const OracleOptions& opts) {
    return betti_impl(I, opts, false, true);
}

BettiTable graded_betti_serial(const MonomialIdeal& I, const OracleOptions& opts) {
    return betti_impl(I, opts, false, false);
}

BettiTable strand_betti(const MonomialIdeal& I, const OracleOptions& opts) {
    return betti_impl(I, opts, true, true);
}

BettiTable strand_betti_serial(const MonomialIdeal& I, const OracleOptions& opts) {
    return betti_impl(I, opts, true, false);
}

std::optional<int> t_s(const MonomialIdeal& I, int s, const OracleOptions& opts) {
    OracleOptions o = opts;
    o.max_row = s;
    return graded_betti(I, o).t(s);
}

int regularity(const BettiTable& table) {
    if (table.rows_computed() != kAllRows)
        throw PreconditionError("regularity needs the full Betti table");
    if (table.entries().empty())
        throw PreconditionError("regularity of the zero ideal is undefined");
    int reg = 0;
    bool first = true;
    for (const auto& e : table.entries()) {
        int v = e.multidegree.degree() - e.row;
        if (first || v > reg) reg = v;
        first = false;
    }
    return reg;
}

int regularity(const MonomialIdeal& I, const OracleOptions& opts) {
    OracleOptions o = opts;
    o.max_row = kAllRows;
    return regularity(graded_betti(I, o));
}

NdpVerdict ndp_from_table(const MonomialIdeal& I, const BettiTable& table, int d, int p) {
    if (p < 1) throw PreconditionError("N_{d,p} requires p >= 1");
    NdpVerdict v;
    v.d = d;
    v.p = p;
    v.field_id = table.field_id();
    if (I.is_zero()) { // vacuous
        v.holds = true;
        return v;
    }
    for (const Monomial& g : I.generators())
        if (g.degree() != d) v.offenses.push_back({0, g.degree(), g});
    if (!v.offenses.empty()) {
        v.holds = false;
        return v;
    }
    if (p == 1) {
        v.holds = true;
        return v;
    }
    if (table.rows_computed() < p - 1)
        throw PreconditionError("N_{d,p} verdict needs Betti rows up to p - 1");
    for (const auto& e : table.entries())
        if (e.row >= 1 && e.row <= p - 1 && e.multidegree.degree() > d + e.row)
            v.offenses.push_back({e.row, e.multidegree.degree(), e.multidegree});
    v.holds = v.offenses.empty();
    return v;
}

NdpVerdict satisfies_ndp(const MonomialIdeal& I, int d, int p, const OracleOptions& opts) {
    if (p < 1) throw PreconditionError("satisfies_ndp requires p >= 1");
    if (I.is_zero() || p == 1) {
        BettiTable empty({}, opts.field.id(), p - 1 >= 0 ? p - 1 : 0);
        return ndp_from_table(I, empty, d, p);
    }
    OracleOptions o = opts;
    o.max_row = p - 1;
    return ndp_from_table(I, graded_betti(I, o), d, p);
}

} // namespace ndp
