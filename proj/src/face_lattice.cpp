#include "polystab/face_lattice.hpp"

#include <cassert>

namespace polystab {

std::size_t FaceLattice::KeyHash::operator()(const std::vector<std::uint64_t>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : k) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

FaceLattice::FaceLattice(const Polytope& p) : p_(&p) {
    assert(!p.empty());
}

int FaceLattice::dim_from_tight(const BitVec& tight) const {
    std::vector<std::size_t> rows;
    tight.for_each([&](std::size_t j) { rows.push_back(j); });
    if (rows.empty()) return p_->face_dim;
    RatMat m(rows.size(), static_cast<std::size_t>(p_->dim));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < p_->dim; ++j) m.at(i, j) = p_->facets[rows[i]].normal[static_cast<std::size_t>(j)];
    return p_->dim - static_cast<int>(rank(m));
}

FaceLattice::FaceId FaceLattice::intern(const BitVec& tight_candidate, const BitVec& verts_candidate) {
    // maximal tight set: intersection of the vertices' tight sets
    BitVec tight = tight_candidate;
    bool first = true;
    verts_candidate.for_each([&](std::size_t v) {
        if (first) {
            tight = p_->vertex_tight[v];
            first = false;
        } else {
            tight = tight.and_with(p_->vertex_tight[v]);
        }
    });
    auto it = index_.find(tight.words());
    if (it != index_.end()) return it->second;

    Face f;
    f.tight = tight;
    // all vertices tight on every halfspace in the set
    BitVec verts(p_->vertices.size());
    for (std::size_t v = 0; v < p_->vertices.size(); ++v) {
        bool ok = true;
        tight.for_each([&](std::size_t j) {
            if (!p_->vertex_tight[v].test(j)) ok = false;
        });
        if (ok) verts.set(v);
    }
    f.verts = verts;
    f.dim = dim_from_tight(tight);
    bool have = false;
    std::uint32_t lo = 0, hi = 0;
    verts.for_each([&](std::size_t v) {
        if (!have) {
            lo = hi = static_cast<std::uint32_t>(v);
            have = true;
        } else {
            hi = static_cast<std::uint32_t>(v);  // vertices are lex-sorted
        }
    });
    f.lexmin = lo;
    f.lexmax = hi;
    f.is_simplex = (verts.count() == static_cast<std::size_t>(f.dim) + 1);
    FaceId id = static_cast<FaceId>(faces_.size());
    faces_.push_back(std::move(f));
    index_.emplace(faces_.back().tight.words(), id);
    return id;
}

FaceLattice::FaceId FaceLattice::top() {
    BitVec all(p_->vertices.size());
    for (std::size_t v = 0; v < p_->vertices.size(); ++v) all.set(v);
    return intern(BitVec(p_->facets.size()), all);
}

FaceLattice::FaceId FaceLattice::face_from_vertices(const BitVec& vm) {
    return intern(BitVec(p_->facets.size()), vm);
}

std::uint32_t FaceLattice::apex(FaceId id, ApexRule rule) const {
    const Face& f = faces_[id];
    return rule == ApexRule::LexMin ? f.lexmin : f.lexmax;
}

const std::vector<FaceLattice::FaceId>& FaceLattice::facets_of(FaceId id) {
    if (faces_[id].facets_built) return faces_[id].facets;
    const int d = faces_[id].dim;
    const BitVec verts = faces_[id].verts;
    const BitVec tight = faces_[id].tight;
    std::vector<FaceId> out;
    for (std::size_t j = 0; j < p_->facets.size(); ++j) {
        if (tight.test(j)) continue;
        BitVec w(p_->vertices.size());
        bool any = false;
        verts.for_each([&](std::size_t v) {
            if (p_->vertex_tight[v].test(j)) {
                w.set(v);
                any = true;
            }
        });
        if (!any) continue;
        FaceId sub = face_from_vertices(w);
        if (faces_[sub].dim != d - 1) continue;
        bool dup = false;
        for (FaceId s : out)
            if (s == sub) { dup = true; break; }
        if (!dup) out.push_back(sub);
    }
    faces_[id].facets = std::move(out);
    faces_[id].facets_built = true;
    return faces_[id].facets;
}

const FaceLattice::Face& FaceLattice::with_chart(FaceId id) {
    Face& f = faces_[id];
    if (f.chart_built || f.dim == 0) {
        f.chart_built = true;
        return f;
    }
    const int n = p_->dim;
    std::vector<std::size_t> rows;
    f.tight.for_each([&](std::size_t j) { rows.push_back(j); });
    if (rows.empty()) {
        // whole polytope: identity chart
        f.basis.assign(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rational(0)));
        for (int i = 0; i < n; ++i) f.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        f.sel.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) f.sel[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    } else {
        RatMat m(rows.size(), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = p_->facets[rows[i]].normal[static_cast<std::size_t>(j)];
        f.basis = nullspace(m);
        assert(static_cast<int>(f.basis.size()) == f.dim);
        // greedy independent row selection
        const std::size_t d = f.basis.size();
        RatMat acc(0, 0);
        std::vector<RatVec> picked;
        for (int i = 0; i < n && f.sel.size() < d; ++i) {
            RatVec row(d);
            for (std::size_t k = 0; k < d; ++k) row[k] = f.basis[k][static_cast<std::size_t>(i)];
            picked.push_back(row);
            RatMat trial(picked.size(), d);
            for (std::size_t r = 0; r < picked.size(); ++r)
                for (std::size_t c = 0; c < d; ++c) trial.at(r, c) = picked[r][c];
            if (rank(trial) == picked.size()) {
                f.sel.push_back(static_cast<std::size_t>(i));
            } else {
                picked.pop_back();
            }
        }
        assert(f.sel.size() == d);
    }
    f.chart_built = true;
    return f;
}

FaceLattice::FaceId FaceLattice::facet_face(std::size_t j) {
    BitVec w(p_->vertices.size());
    for (auto v : p_->facet_vertices[j]) w.set(v);
    return face_from_vertices(w);
}

}  // namespace polystab
