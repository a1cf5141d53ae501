// Rational polytopes carrying both representations: lex-sorted vertex list,
// canonical facet list, and facet-vertex incidence. Immutable once built.
#pragma once

#include "polystab/linalg.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace polystab {

struct Unbounded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyPolytope : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Degenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OriginNotInterior : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotReflexive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// l(x) = <normal, x> + offset >= 0 on the inside.
struct Halfspace {
    RatVec normal;
    Rational offset;

    Rational eval(const RatVec& x) const { return dot(normal, x) + offset; }
};

// Divides (normal, offset) by the gcd of the normal's numerators when the
// normal is integral, or rescales a rational normal to primitive integer
// form. Offset scales along.
Halfspace primitivize(const Halfspace& h);

enum class Tri : std::uint8_t { Unknown, False, True };

// Small fixed-capacity bitset over vertex indices.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : size_(bits), words_((bits + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    std::size_t size() const { return size_; }
    std::size_t count() const;
    BitVec and_with(const BitVec& other) const;
    bool operator==(const BitVec& other) const = default;
    const std::vector<std::uint64_t>& words() const { return words_; }
    // iterate set bits
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Polytope {
    int dim = 0;        // ambient dimension
    int face_dim = -1;  // affine dimension of the body; -1 when empty
    std::vector<RatVec> vertices;             // lex-sorted
    std::vector<Halfspace> facets;            // canonical order, irredundant
    std::vector<std::vector<std::uint32_t>> facet_vertices;
    std::vector<BitVec> vertex_tight;         // per-vertex facet incidence
    Tri is_lattice = Tri::Unknown;
    Tri is_reflexive = Tri::Unknown;
    Tri is_smooth_fano = Tri::Unknown;

    bool empty() const { return vertices.empty(); }
    bool full_dimensional() const { return face_dim == dim; }
    bool contains(const RatVec& x) const;
};

// All vertices of the intersection of the halfspaces, deduplicated and
// lex-sorted, with incidence populated and redundant halfspaces dropped.
// Throws Unbounded when a recession direction exists. An infeasible system
// yields an empty polytope (face_dim = -1).
Polytope enumerate_vertices(const std::vector<Halfspace>& halfspaces, int n);

// Convex hull of the given points: irredundant facet list (primitive integer
// normals for lattice input), non-vertex points dropped, incidence populated.
// Throws Degenerate when the hull is not full-dimensional.
Polytope enumerate_facets(const std::vector<RatVec>& points);

// {x : <x, v> >= -1 for every vertex v of p}. Requires the origin strictly
// interior; throws OriginNotInterior otherwise.
Polytope polar_dual(const Polytope& p);

bool is_lattice_polytope(Polytope& p);
bool is_reflexive(Polytope& p);
// Every facet has exactly n incident vertices forming a determinant-±1 basis.
bool is_smooth_fano(Polytope& p);

struct CutResult {
    Polytope region;
    // For each facet of `region`, the index of the source halfspace in the
    // input (p.facets order, with p.facets.size() denoting the cut itself).
    std::vector<std::size_t> source;
};

// p ∩ {l_h >= 0}, exact; possibly empty or lower-dimensional (see face_dim).
CutResult intersect_halfspace(const Polytope& p, const Halfspace& h);

Polytope cartesian_product(const Polytope& a, const Polytope& b);

// conv(a x {0} ∪ {0} x b); both operands must contain the origin strictly
// inside. Dual to cartesian_product of the duals.
Polytope free_sum(const Polytope& a, const Polytope& b);

// Helper shared by constructions that already know vertices + halfspaces:
// sorts canonically, fills incidence, drops redundant halfspaces.
Polytope assemble_polytope(int n, std::vector<RatVec> vertices,
                           std::vector<Halfspace> halfspaces,
                           std::vector<std::size_t>* source_map = nullptr);

}  // namespace polystab
