// The analysis pipeline: P^-, the instability criterion, and full
// stability certificates.
#pragma once

#include "polystab/potential.hpp"

#include <string>

namespace polystab {

struct CriterionResult {
    bool applicable = false;  // Vol(P^-) > 0
    Rational vol_pminus;
    Rational integral;  // int_{P^-} (1 - theta)^2 dv
    Rational lhs;       // 1 - c
    Rational rhs;       // integral / vol_pminus, defined when applicable
    bool satisfied = false;  // applicable and lhs < rhs
    std::size_t pminus_vertex_count = 0;
};

// P^- = {x in P : theta(x) >= 1}, taken closed; may be empty or
// lower-dimensional (see region.face_dim).
CutResult pminus(const Polytope& p, const AffinePotential& theta);

CriterionResult instability_test(const Polytope& p, const AffinePotential& theta);
CriterionResult instability_test(const Polytope& p, const AffinePotential& theta,
                                 const CutResult& cut);

enum class InputKind { FanoPolytope, MomentPolytope };

struct StabilityCertificate {
    std::string input_kind;
    std::string source;  // file path or family descriptor, set by the caller
    int dim = 0;
    // Fano polytope block (when the input was a Fano polytope)
    bool has_fano_block = false;
    std::size_t fano_vertices = 0, fano_facets = 0;
    bool fano_reflexive = false, fano_smooth = false;
    // moment polytope block
    std::size_t moment_vertices = 0, moment_facets = 0;
    bool moment_reflexive = false;
    bool moment_smooth = false;  // Delzant: n facets per vertex, unimodular normals
    BodyMoments moments;
    AffinePotential potential;
    Rational sbar;
    Rational mabuchi;
    RatVec mabuchi_argmax;
    bool sufficient_polystable = false;  // M <= 1
    bool ding_unstable = false;          // M > 1
    CriterionResult criterion;
    std::string destabilizer_desc;
    Rational destabilizer_value;  // L_P(max(0, theta - 1))
    std::string warning;
    double elapsed_seconds = 0.0;
};

// Full pipeline. A Fano polytope input is dualized first; non-reflexive
// input is a hard error, a non-smooth reflexive Fano polytope is analyzed
// with a warning recorded in the certificate.
StabilityCertificate analyze(const Polytope& input, InputKind kind);

}  // namespace polystab
