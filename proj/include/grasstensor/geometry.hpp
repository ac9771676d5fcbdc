#ifndef GRASSTENSOR_GEOMETRY_HPP
#define GRASSTENSOR_GEOMETRY_HPP

#include <array>
#include <cstdint>

#include "grasstensor/exact_linalg.hpp"
#include "grasstensor/matrix.hpp"

namespace grasstensor {

/// Column-selection counts per view: a partition (alpha_1, alpha_2, alpha_3)
/// of k+1 with 1 <= alpha_j <= h_j.
struct Profile {
    std::array<int, 3> alpha{0, 0, 0};
};

/// Three projections P_j from P^k onto P^{h_j}, each a full-rank
/// (h_j+1) x (k+1) matrix, together with a profile.
struct ProjectionSetup {
    int k = 0;
    std::array<int, 3> h{0, 0, 0};
    std::array<RationalMatrix, 3> P;
    Profile profile;

    /// Throws SetupError on inconsistent dimensions, an out-of-range
    /// profile, or a rank-deficient projection.
    void validate() const;
};

/// The dimension bookkeeping of a setup.  With L_j the column space of
/// P_j^T:  i_rs = h_r + h_s + 1 - k,  i = h_1 + h_2 + h_3 + 1 - 2k,
/// j_rs = i_rs - i = k - h_t; under genericity these are the dimensions of
/// the pairwise and triple intersections of the L_j.
struct DimensionInvariants {
    int k = 0;
    std::array<int, 3> h{0, 0, 0};
    std::array<int, 3> alpha{0, 0, 0};
    std::array<int, 3> s{0, 0, 0};           // s_j = h_j - alpha_j
    std::array<std::int64_t, 3> n{0, 0, 0};  // n_j = C(h_j+1, s_j+1)
    int i = 0;
    std::array<int, 3> i_pair{0, 0, 0};  // pairs (1,2), (1,3), (2,3)
    std::array<int, 3> j_pair{0, 0, 0};

    /// j_{r,s} for distinct 1-based view indices.
    int j(int r, int s) const;
    int i_rs(int r, int s) const;
};

DimensionInvariants invariants(const ProjectionSetup& setup);

/// Same computation from dimensions alone (used by the setup-free sweep).
DimensionInvariants invariants_from_dims(int k, const std::array<int, 3>& h,
                                         const std::array<int, 3>& alpha);

struct GenericityReport {
    bool generic = false;
    // On failure, the triple (r,s,t) for which L_t together with L_r ∩ L_s
    // does not span the ambient space.
    std::array<int, 3> witness{0, 0, 0};
};

/// True iff for every split {r,s | t} of the views, L_t and L_r ∩ L_s span
/// C^{k+1}.
GenericityReport check_genericity(const ProjectionSetup& setup);

/// The (k+1) x (h_1+h_2+h_3+3) canonical block matrix: rows split into bands
/// of heights (i, j_12, j_13, j_23); block j carries identity blocks in the
/// bands incident to view j.  Requires i >= 0.
RationalMatrix canonical_matrix(const DimensionInvariants& inv);

/// A setup whose stacked transposed projections equal canonical_matrix(inv).
ProjectionSetup canonical_setup(const DimensionInvariants& inv);

/// Changes of basis H_j in the views and K in the ambient space that realize
/// the canonical form, plus the induced Pluecker-coordinate transformations
/// V_j = compound(H_j^{-1}, s_j+1)^T and their inverses.
struct CanonicalTransform {
    std::array<RationalMatrix, 3> H;
    RationalMatrix K;
    std::array<RationalMatrix, 3> V;
    std::array<RationalMatrix, 3> Vinv;  // = compound(H_j, s_j+1)^T
};

/// Computes H_j, K with [(H_1 P_1 K)^T | (H_2 P_2 K)^T | (H_3 P_3 K)^T]
/// exactly equal to canonical_matrix.  Throws GenericityError when the
/// genericity assumption fails.
CanonicalTransform canonicalize(const ProjectionSetup& setup);

}  // namespace grasstensor

#endif
