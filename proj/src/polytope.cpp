#include "polystab/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>

namespace polystab {

std::size_t BitVec::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

BitVec BitVec::and_with(const BitVec& other) const {
    assert(size_ == other.size_);
    BitVec out(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
    return out;
}

Halfspace primitivize(const Halfspace& h) {
    BigInt l = 1;
    for (const auto& x : h.normal)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    BigInt g = 0;
    for (const auto& x : h.normal) {
        BigInt scaled = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    if (g == 0) return {h.normal, h.offset};  // zero normal, leave alone
    Rational s = Rational(l) / Rational(g);
    Halfspace out;
    out.normal.reserve(h.normal.size());
    for (const auto& x : h.normal) out.normal.push_back(x * s);
    out.offset = h.offset * s;
    return out;
}

bool Polytope::contains(const RatVec& x) const {
    for (const auto& f : facets)
        if (f.eval(x) < 0) return false;
    return true;
}

namespace {

bool lex_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
    if (lex_less(a.normal, b.normal)) return true;
    if (lex_less(b.normal, a.normal)) return false;
    return cmp(a.offset, b.offset) < 0;
}

int affine_rank(const std::vector<RatVec>& pts, int n) {
    if (pts.empty()) return -1;
    if (pts.size() == 1) return 0;
    RatMat diffs(pts.size() - 1, n);
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (int j = 0; j < n; ++j) diffs.at(i - 1, j) = pts[i][j] - pts[0][j];
    return static_cast<int>(rank(diffs));
}

// next n-combination of {0..k-1} in lexicographic order
bool next_combination(std::vector<std::size_t>& idx, std::size_t k) {
    const std::size_t n = idx.size();
    for (std::size_t i = n; i-- > 0;) {
        if (idx[i] + (n - i) < k) {
            ++idx[i];
            for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct RatVecLess {
    bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};

// Recession-direction scan: an unbounded feasible system either has
// deficient normal rank or an extreme ray with n-1 independent tight rows.
bool has_recession_direction(const std::vector<Halfspace>& hs, int n) {
    RatMat all(hs.size(), n);
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (int j = 0; j < n; ++j) all.at(i, j) = hs[i].normal[j];
    if (rank(all) < static_cast<std::size_t>(n)) return true;
    if (n == 1) {
        // rays are just signs: direction d = ±1 with all normals on one side
        for (int s : {1, -1}) {
            bool ok = true;
            for (const auto& h : hs)
                if (h.normal[0] * s < 0) { ok = false; break; }
            if (ok) return true;
        }
        return false;
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(n) - 1);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    do {
        RatMat sub(idx.size(), n);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (int j = 0; j < n; ++j) sub.at(i, j) = hs[idx[i]].normal[j];
        auto ns = nullspace(sub);
        if (ns.size() != 1) continue;
        const RatVec& d = ns[0];
        bool pos = true, neg = true;
        for (const auto& h : hs) {
            int c = cmp(dot(h.normal, d), Rational(0));
            if (c < 0) pos = false;
            if (c > 0) neg = false;
            if (!pos && !neg) break;
        }
        if (pos || neg) return true;
    } while (next_combination(idx, hs.size()));
    return false;
}

std::vector<Halfspace> dedupe_halfspaces(const std::vector<Halfspace>& hs) {
    std::vector<Halfspace> out;
    for (const auto& h : hs) {
        Halfspace p = primitivize(h);
        bool seen = false;
        for (const auto& q : out)
            if (q.normal == p.normal && q.offset == p.offset) { seen = true; break; }
        if (!seen) out.push_back(std::move(p));
    }
    return out;
}

std::vector<RatVec> enumerate_vertex_set(const std::vector<Halfspace>& hs, int n) {
    std::map<RatVec, bool, RatVecLess> found;
    if (hs.size() < static_cast<std::size_t>(n)) return {};
    std::vector<std::size_t> idx(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    RatMat a(n, n);
    RatVec rhs(static_cast<std::size_t>(n));
    do {
        for (int i = 0; i < n; ++i) {
            const auto& h = hs[idx[static_cast<std::size_t>(i)]];
            for (int j = 0; j < n; ++j) a.at(i, j) = h.normal[j];
            rhs[static_cast<std::size_t>(i)] = -h.offset;
        }
        auto x = try_solve(a, rhs);
        if (!x) continue;
        bool feasible = true;
        for (const auto& h : hs)
            if (h.eval(*x) < 0) { feasible = false; break; }
        if (feasible) found.emplace(std::move(*x), true);
    } while (next_combination(idx, hs.size()));
    std::vector<RatVec> verts;
    verts.reserve(found.size());
    for (auto& [v, _] : found) verts.push_back(v);
    return verts;
}

}  // namespace

Polytope assemble_polytope(int n, std::vector<RatVec> vertices,
                           std::vector<Halfspace> halfspaces,
                           std::vector<std::size_t>* source_map) {
    Polytope p;
    p.dim = n;
    std::sort(vertices.begin(), vertices.end(), lex_less);
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    p.vertices = std::move(vertices);
    if (p.vertices.empty()) {
        p.face_dim = -1;
        if (source_map) source_map->clear();
        return p;
    }
    p.face_dim = affine_rank(p.vertices, n);

    // canonicalize halfspaces, keep source indices alongside
    std::vector<std::pair<Halfspace, std::size_t>> hs;
    for (std::size_t i = 0; i < halfspaces.size(); ++i)
        hs.emplace_back(primitivize(halfspaces[i]), i);
    std::sort(hs.begin(), hs.end(),
              [](const auto& a, const auto& b) { return halfspace_less(a.first, b.first); });

    const bool full = (p.face_dim == n);
    std::vector<std::vector<std::uint32_t>> incidence;
    std::vector<std::pair<Halfspace, std::size_t>> kept;
    for (auto& [h, src] : hs) {
        std::vector<std::uint32_t> inc;
        for (std::size_t k = 0; k < p.vertices.size(); ++k)
            if (h.eval(p.vertices[k]) == 0) inc.push_back(static_cast<std::uint32_t>(k));
        if (full) {
            // facet iff its tight vertex set is (n-1)-dimensional
            if (inc.size() < static_cast<std::size_t>(n)) continue;
            std::vector<RatVec> pts;
            pts.reserve(inc.size());
            for (auto k : inc) pts.push_back(p.vertices[k]);
            if (affine_rank(pts, n) != n - 1) continue;
        }
        if (!kept.empty() && kept.back().first.normal == h.normal &&
            kept.back().first.offset == h.offset)
            continue;  // duplicate after primitivization
        kept.emplace_back(std::move(h), src);
        incidence.push_back(std::move(inc));
    }
    p.facets.reserve(kept.size());
    if (source_map) source_map->clear();
    for (auto& [h, src] : kept) {
        p.facets.push_back(std::move(h));
        if (source_map) source_map->push_back(src);
    }
    p.facet_vertices = std::move(incidence);
    p.vertex_tight.assign(p.vertices.size(), BitVec(p.facets.size()));
    for (std::size_t f = 0; f < p.facet_vertices.size(); ++f)
        for (auto k : p.facet_vertices[f]) p.vertex_tight[k].set(f);
    return p;
}

Polytope enumerate_vertices(const std::vector<Halfspace>& halfspaces, int n) {
    auto hs = dedupe_halfspaces(halfspaces);
    for (const auto& h : hs)
        if (static_cast<int>(h.normal.size()) != n)
            throw std::invalid_argument("enumerate_vertices: dimension mismatch");
    if (has_recession_direction(hs, n)) throw Unbounded("enumerate_vertices: unbounded system");
    auto verts = enumerate_vertex_set(hs, n);
    if (verts.empty()) throw EmptyPolytope("enumerate_vertices: infeasible system");
    return assemble_polytope(n, std::move(verts), std::move(hs));
}

namespace {

// Incremental row echelon over Q, capped use: rank queries while adding rows.
class IncrementalRank {
public:
    bool add(RatVec v) {
        for (const auto& [col, row] : rows_) {
            if (v[col] == 0) continue;
            Rational f = v[col] / row[col];
            for (std::size_t j = col; j < v.size(); ++j) v[j] -= f * row[j];
        }
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] != 0) {
                rows_.emplace_back(j, std::move(v));
                return true;
            }
        }
        return false;
    }
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<std::pair<std::size_t, RatVec>> rows_;
};

// A point of a full-dimensional hull is a vertex iff its tight facet normals
// span the whole space.
std::vector<RatVec> filter_vertices(const std::vector<RatVec>& points,
                                    const std::vector<Halfspace>& facets, int n) {
    std::vector<RatVec> out;
    for (const auto& pt : points) {
        IncrementalRank ir;
        for (const auto& h : facets) {
            if (h.eval(pt) != 0) continue;
            ir.add(h.normal);
            if (ir.rank() == static_cast<std::size_t>(n)) break;
        }
        if (ir.rank() == static_cast<std::size_t>(n)) out.push_back(pt);
    }
    return out;
}

// --- integer fast path for hyperplanes through lattice point subsets ---

using int128 = __int128;

int128 abs128(int128 x) { return x < 0 ? -x : x; }

int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// All coordinates integers small enough that n x n minors of [p | 1] stay
// below 2^61 (Hadamard), so Bareiss products fit in __int128.
bool int_path_applicable(const std::vector<RatVec>& points, int n, std::vector<long>& coords) {
    long maxabs = 1;
    coords.clear();
    coords.reserve(points.size() * static_cast<std::size_t>(n));
    for (const auto& pt : points)
        for (const auto& x : pt) {
            if (x.get_den() != 1 || !x.get_num().fits_slong_p()) return false;
            long v = x.get_num().get_si();
            coords.push_back(v);
            maxabs = std::max(maxabs, std::abs(v));
        }
    double bits = 0.5 * static_cast<double>(n) *
                  std::log2(static_cast<double>(n) * static_cast<double>(maxabs) *
                                static_cast<double>(maxabs) +
                            1.0);
    return bits < 61.0;
}

// Bareiss echelon of the n x (n+1) system [p_i | 1]; writes the primitive
// nullvector (u, c) to `out` and returns true when the subset spans a
// hyperplane. `m` is caller-provided scratch.
bool int_hyperplane(const std::vector<long>& coords, int n, const std::vector<std::size_t>& idx,
                    std::vector<int128>& m, std::vector<int128>& out) {
    const int cols = n + 1;
    m.assign(static_cast<std::size_t>(n) * cols, 0);
    for (int i = 0; i < n; ++i) {
        const long* p = &coords[idx[static_cast<std::size_t>(i)] * static_cast<std::size_t>(n)];
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i * cols + j)] = p[j];
        m[static_cast<std::size_t>(i * cols + n)] = 1;
    }
    std::vector<int> pivot_col(static_cast<std::size_t>(n), -1);
    int128 prev = 1;
    int r = 0;
    for (int col = 0; col < cols && r < n; ++col) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (m[static_cast<std::size_t>(i * cols + col)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j)
                std::swap(m[static_cast<std::size_t>(piv * cols + j)],
                          m[static_cast<std::size_t>(r * cols + j)]);
        for (int i = r + 1; i < n; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m[static_cast<std::size_t>(i * cols + j)] =
                    (m[static_cast<std::size_t>(r * cols + col)] * m[static_cast<std::size_t>(i * cols + j)] -
                     m[static_cast<std::size_t>(i * cols + col)] * m[static_cast<std::size_t>(r * cols + j)]) /
                    prev;
            m[static_cast<std::size_t>(i * cols + col)] = 0;
        }
        prev = m[static_cast<std::size_t>(r * cols + col)];
        pivot_col[static_cast<std::size_t>(r)] = col;
        ++r;
    }
    if (r != n) return false;  // degenerate subset, no unique hyperplane
    int free_col = 0;
    {
        std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
        for (int i = 0; i < n; ++i) is_pivot[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] = true;
        for (int j = 0; j < cols; ++j)
            if (!is_pivot[static_cast<std::size_t>(j)]) { free_col = j; break; }
    }
    out.assign(static_cast<std::size_t>(cols), 0);
    out[static_cast<std::size_t>(free_col)] = 1;
    for (int i = n - 1; i >= 0; --i) {
        const int p = pivot_col[static_cast<std::size_t>(i)];
        int128 s = 0;
        for (int j = p + 1; j < cols; ++j)
            s += m[static_cast<std::size_t>(i * cols + j)] * out[static_cast<std::size_t>(j)];
        int128 piv = m[static_cast<std::size_t>(i * cols + p)];
        // scale the already-set entries by piv, set x_p = -s, reduce by gcd
        int128 g = gcd128(s, piv);
        if (g == 0) g = 1;
        int128 mul = piv / g;
        if (mul != 1)
            for (int j = 0; j < cols; ++j)
                if (j != p) out[static_cast<std::size_t>(j)] *= mul;
        out[static_cast<std::size_t>(p)] = -(s / g);
        int128 all = 0;
        for (int j = 0; j < cols; ++j) all = gcd128(all, out[static_cast<std::size_t>(j)]);
        if (all > 1)
            for (int j = 0; j < cols; ++j) out[static_cast<std::size_t>(j)] /= all;
    }
    return true;
}

}  // namespace

Polytope enumerate_facets(const std::vector<RatVec>& points) {
    if (points.empty()) throw Degenerate("enumerate_facets: no points");
    const int n = static_cast<int>(points[0].size());
    if (affine_rank(points, n) != n)
        throw Degenerate("enumerate_facets: points do not span the space");

    std::vector<long> coords;
    if (int_path_applicable(points, n, coords)) {
        // integer Bareiss path with early-exit orientation
        std::vector<Halfspace> facets;
        std::set<std::vector<long long>> seen;
        std::vector<std::size_t> idx(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::vector<int128> scratch, nv;
        do {
            if (!int_hyperplane(coords, n, idx, scratch, nv)) continue;
            int sign = 0;
            bool mixed = false;
            for (std::size_t pi = 0; pi < points.size() && !mixed; ++pi) {
                int128 s = nv[static_cast<std::size_t>(n)];
                const long* pc = &coords[pi * static_cast<std::size_t>(n)];
                for (int j = 0; j < n; ++j) s += nv[static_cast<std::size_t>(j)] * pc[j];
                if (s == 0) continue;
                int sg = s > 0 ? 1 : -1;
                if (sign == 0)
                    sign = sg;
                else if (sign != sg)
                    mixed = true;
            }
            if (mixed || sign == 0) continue;
            // primitive entries are bounded by the minors, which the
            // applicability gate keeps below 2^61
            std::vector<long long> key(static_cast<std::size_t>(n) + 1);
            for (int j = 0; j <= n; ++j) {
                int128 v = sign * nv[static_cast<std::size_t>(j)];
                assert(v <= INT64_MAX && v >= INT64_MIN);
                key[static_cast<std::size_t>(j)] = static_cast<long long>(v);
            }
            if (!seen.insert(key).second) continue;
            Halfspace h;
            h.normal.reserve(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) h.normal.emplace_back(static_cast<long>(key[static_cast<std::size_t>(j)]));
            h.offset = static_cast<long>(key[static_cast<std::size_t>(n)]);
            facets.push_back(std::move(h));
        } while (next_combination(idx, points.size()));
        auto verts = filter_vertices(points, facets, n);
        return assemble_polytope(n, std::move(verts), std::move(facets));
    }

    std::vector<Halfspace> facets;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    do {
        // hyperplane {<u,x> + c = 0} through the chosen points
        RatMat m(n, n + 1);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m.at(i, j) = points[idx[static_cast<std::size_t>(i)]][j];
            m.at(i, n) = 1;
        }
        auto ns = nullspace(m);
        if (ns.size() != 1) continue;
        RatVec u(ns[0].begin(), ns[0].begin() + n);
        bool zero = true;
        for (const auto& x : u)
            if (x != 0) { zero = false; break; }
        if (zero) continue;
        Halfspace h{std::move(u), ns[0][static_cast<std::size_t>(n)]};
        bool any_pos = false, any_neg = false;
        for (const auto& pt : points) {
            int c = cmp(h.eval(pt), Rational(0));
            if (c > 0) any_pos = true;
            if (c < 0) any_neg = true;
            if (any_pos && any_neg) break;
        }
        if (any_pos && any_neg) continue;
        if (any_neg) {
            for (auto& x : h.normal) x = -x;
            h.offset = -h.offset;
        }
        facets.push_back(std::move(h));
    } while (next_combination(idx, points.size()));

    auto verts = filter_vertices(points, facets, n);
    return assemble_polytope(n, std::move(verts), std::move(facets));
}

Polytope polar_dual(const Polytope& p) {
    if (!p.full_dimensional() || p.facets.empty())
        throw OriginNotInterior("polar_dual: input not full-dimensional");
    for (const auto& f : p.facets)
        if (f.offset <= 0) throw OriginNotInterior("polar_dual: origin not strictly interior");
    std::vector<Halfspace> hs;
    hs.reserve(p.vertices.size());
    for (const auto& v : p.vertices) hs.push_back({v, Rational(1)});
    auto verts = enumerate_vertex_set(dedupe_halfspaces(hs), p.dim);
    return assemble_polytope(p.dim, std::move(verts), std::move(hs));
}

bool is_lattice_polytope(Polytope& p) {
    if (p.is_lattice == Tri::Unknown) {
        bool ok = true;
        for (const auto& v : p.vertices)
            for (const auto& x : v)
                if (x.get_den() != 1) { ok = false; break; }
        p.is_lattice = ok ? Tri::True : Tri::False;
    }
    return p.is_lattice == Tri::True;
}

bool is_reflexive(Polytope& p) {
    if (p.is_reflexive == Tri::Unknown) {
        bool ok = p.full_dimensional() && is_lattice_polytope(p);
        if (ok) {
            for (const auto& f : p.facets) {
                for (const auto& x : f.normal)
                    if (x.get_den() != 1) { ok = false; break; }
                if (f.offset != 1) { ok = false; }
                if (!ok) break;
            }
        }
        p.is_reflexive = ok ? Tri::True : Tri::False;
    }
    return p.is_reflexive == Tri::True;
}

bool is_smooth_fano(Polytope& p) {
    if (p.is_smooth_fano == Tri::Unknown) {
        bool ok = is_reflexive(p);
        if (ok) {
            const int n = p.dim;
            for (std::size_t f = 0; f < p.facets.size() && ok; ++f) {
                const auto& inc = p.facet_vertices[f];
                if (static_cast<int>(inc.size()) != n) { ok = false; break; }
                RatMat m(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) m.at(i, j) = p.vertices[inc[static_cast<std::size_t>(i)]][j];
                Rational d = determinant(m);
                if (d != 1 && d != -1) ok = false;
            }
        }
        p.is_smooth_fano = ok ? Tri::True : Tri::False;
    }
    return p.is_smooth_fano == Tri::True;
}

CutResult intersect_halfspace(const Polytope& p, const Halfspace& h) {
    std::vector<Halfspace> hs = p.facets;
    hs.push_back(h);
    // dedupe while remembering where each survivor came from
    std::vector<Halfspace> prim;
    std::vector<std::size_t> prim_src;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        Halfspace q = primitivize(hs[i]);
        bool seen = false;
        for (const auto& r : prim)
            if (r.normal == q.normal && r.offset == q.offset) { seen = true; break; }
        if (!seen) {
            prim.push_back(std::move(q));
            prim_src.push_back(i);
        }
    }
    auto verts = enumerate_vertex_set(prim, p.dim);
    CutResult out;
    std::vector<std::size_t> kept;
    out.region = assemble_polytope(p.dim, std::move(verts), prim, &kept);
    out.source.reserve(kept.size());
    for (auto k : kept) out.source.push_back(prim_src[k]);
    return out;
}

Polytope cartesian_product(const Polytope& a, const Polytope& b) {
    const int n = a.dim + b.dim;
    std::vector<RatVec> verts;
    verts.reserve(a.vertices.size() * b.vertices.size());
    for (const auto& va : a.vertices)
        for (const auto& vb : b.vertices) {
            RatVec v = va;
            v.insert(v.end(), vb.begin(), vb.end());
            verts.push_back(std::move(v));
        }
    std::vector<Halfspace> hs;
    for (const auto& f : a.facets) {
        RatVec u = f.normal;
        u.resize(static_cast<std::size_t>(n), Rational(0));
        hs.push_back({std::move(u), f.offset});
    }
    for (const auto& f : b.facets) {
        RatVec u(static_cast<std::size_t>(a.dim), Rational(0));
        u.insert(u.end(), f.normal.begin(), f.normal.end());
        hs.push_back({std::move(u), f.offset});
    }
    Polytope p = assemble_polytope(n, std::move(verts), std::move(hs));
    if (a.is_lattice == Tri::True && b.is_lattice == Tri::True) p.is_lattice = Tri::True;
    return p;
}

Polytope free_sum(const Polytope& a, const Polytope& b) {
    for (const auto* q : {&a, &b}) {
        if (!q->full_dimensional()) throw OriginNotInterior("free_sum: degenerate operand");
        for (const auto& f : q->facets)
            if (f.offset <= 0) throw OriginNotInterior("free_sum: origin not strictly interior");
    }
    const int n = a.dim + b.dim;
    std::vector<RatVec> verts;
    for (const auto& va : a.vertices) {
        RatVec v = va;
        v.resize(static_cast<std::size_t>(n), Rational(0));
        verts.push_back(std::move(v));
    }
    for (const auto& vb : b.vertices) {
        RatVec v(static_cast<std::size_t>(a.dim), Rational(0));
        v.insert(v.end(), vb.begin(), vb.end());
        verts.push_back(std::move(v));
    }
    // dual of the free sum is the product of duals: one facet per facet pair
    std::vector<Halfspace> hs;
    for (const auto& fa : a.facets)
        for (const auto& fb : b.facets) {
            RatVec u;
            u.reserve(static_cast<std::size_t>(n));
            for (const auto& x : fa.normal) u.push_back(x / fa.offset);
            for (const auto& x : fb.normal) u.push_back(x / fb.offset);
            hs.push_back({std::move(u), Rational(1)});
        }
    return assemble_polytope(n, std::move(verts), std::move(hs));
}

}  // namespace polystab
