// Lazy face lattice of a polytope, keyed by maximal tight halfspace sets.
// Backs both the pulling triangulation and the closed-form moment engine.
#pragma once

#include "polystab/polytope.hpp"

#include <cstdint>
#include <unordered_map>

namespace polystab {

enum class ApexRule { LexMin, LexMax };

class FaceLattice {
public:
    using FaceId = std::uint32_t;

    struct Face {
        BitVec tight;    // over facets of the parent polytope (maximal tight set)
        BitVec verts;    // vertices lying on the face
        int dim = 0;
        std::uint32_t lexmin = 0, lexmax = 0;  // vertex indices
        bool is_simplex = false;               // |verts| == dim + 1
        std::vector<FaceId> facets;            // faces one dimension down
        bool facets_built = false;
        // affine chart: x = base + basis * t, basis columns span the direction
        // space; sel rows make the basis row-selectable for transitions
        bool chart_built = false;
        std::vector<RatVec> basis;             // dim columns, each length n
        std::vector<std::size_t> sel;          // dim row indices
    };

    explicit FaceLattice(const Polytope& p);

    const Polytope& polytope() const { return *p_; }
    FaceId top();
    FaceId face_from_vertices(const BitVec& vm);
    const Face& face(FaceId id) const { return faces_[id]; }
    std::uint32_t apex(FaceId id, ApexRule rule) const;
    // builds (once) and returns the face's facet list
    const std::vector<FaceId>& facets_of(FaceId id);
    // builds (once) the chart of a positive-dimensional face
    const Face& with_chart(FaceId id);
    // face of the polytope facet j, if that facet is (n-1)-dimensional
    FaceId facet_face(std::size_t j);

    std::size_t face_count() const { return faces_.size(); }

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<std::uint64_t>& k) const;
    };

    FaceId intern(const BitVec& tight_candidate, const BitVec& verts_candidate);
    int dim_from_tight(const BitVec& tight) const;

    const Polytope* p_;
    std::vector<Face> faces_;
    std::unordered_map<std::vector<std::uint64_t>, FaceId, KeyHash> index_;
};

}  // namespace polystab
