#ifndef GRASSTENSOR_GRASSMANN_HPP
#define GRASSTENSOR_GRASSMANN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "grasstensor/geometry.hpp"
#include "grasstensor/tensor3.hpp"

namespace grasstensor {

/// Trifocal Grassmann tensor: entry (rank_lex(I), rank_lex(J), rank_lex(K))
/// is the maximal minor of [P1^T | P2^T | P3^T] on the columns NOT indexed
/// by I, J, K (block order, ascending within each block) times the
/// complementary-minor sign (-1)^{sum I + sum J + sum K}.  The sign rule is
/// calibrated once against a worked fixture and frozen
/// ("block-ascending-v1").
struct GrassmannTensor {
    Tensor3<Rational> tensor;
    ProjectionSetup setup;
    DimensionInvariants inv;
};

GrassmannTensor build(const ProjectionSetup& setup);

/// Pluecker coordinate vector of a subspace given by an (h+1) x (s+1) basis
/// matrix of full column rank: all (s+1)-minors, rows in rank_lex order.
std::vector<Rational> plucker_of_subspace(const RationalMatrix& basis);

/// Full contraction sum T[I,J,K] w1[I] w2[J] w3[K].
Rational contract_plucker(const GrassmannTensor& gt, const std::vector<Rational>& w1,
                          const std::vector<Rational>& w2, const std::vector<Rational>& w3);

struct CorrespondenceCheck {
    Rational residual = 0;
    int point_resamples = 0;  // times X had to be redrawn because it hit a center
};

/// Samples random s_j-spaces through the images P_j(X) of a common point, so
/// the three subspaces correspond, and contracts the tensor against their
/// Pluecker vectors.  The residual is exactly zero for a Grassmann tensor.
/// If X lies in a projection center it is resampled from the generator.
CorrespondenceCheck verify_correspondence(const GrassmannTensor& gt, std::vector<Rational> X,
                                          std::mt19937_64& rng);

}  // namespace grasstensor

#endif
