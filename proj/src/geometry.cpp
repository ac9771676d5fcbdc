#include "grasstensor/geometry.hpp"

#include <string>

#include "grasstensor/multiindex.hpp"

namespace grasstensor {

namespace {

int pair_slot(int r, int s) {
    if (r > s) std::swap(r, s);
    if (r == 1 && s == 2) return 0;
    if (r == 1 && s == 3) return 1;
    if (r == 2 && s == 3) return 2;
    throw DimensionError("invalid view pair");
}

}  // namespace

int DimensionInvariants::j(int r, int s) const { return j_pair[pair_slot(r, s)]; }
int DimensionInvariants::i_rs(int r, int s) const { return i_pair[pair_slot(r, s)]; }

void ProjectionSetup::validate() const {
    int alpha_sum = 0;
    for (int j = 0; j < 3; ++j) {
        if (h[j] < 2) throw SetupError("view " + std::to_string(j + 1) + ": h must be >= 2");
        if (h[j] >= k) throw SetupError("view " + std::to_string(j + 1) + ": h must be < k");
        const int a = profile.alpha[j];
        if (a < 1 || a > h[j])
            throw SetupError("profile entry " + std::to_string(j + 1) + " out of range [1, h]");
        alpha_sum += a;
        if (P[j].rows() != h[j] + 1 || P[j].cols() != k + 1)
            throw SetupError("projection " + std::to_string(j + 1) + " has wrong shape");
        if (rank(P[j]) != h[j] + 1)
            throw SetupError("projection " + std::to_string(j + 1) + " is rank deficient");
    }
    if (alpha_sum != k + 1) throw SetupError("profile does not sum to k+1");
}

DimensionInvariants invariants_from_dims(int k, const std::array<int, 3>& h,
                                         const std::array<int, 3>& alpha) {
    int alpha_sum = 0;
    for (int j = 0; j < 3; ++j) {
        if (h[j] < 2 || h[j] >= k) throw SetupError("view dimension out of range");
        if (alpha[j] < 1 || alpha[j] > h[j]) throw SetupError("profile entry out of range");
        alpha_sum += alpha[j];
    }
    if (alpha_sum != k + 1) throw SetupError("profile does not sum to k+1");

    DimensionInvariants inv;
    inv.k = k;
    inv.h = h;
    inv.alpha = alpha;
    inv.i = h[0] + h[1] + h[2] + 1 - 2 * k;
    inv.i_pair = {h[0] + h[1] + 1 - k, h[0] + h[2] + 1 - k, h[1] + h[2] + 1 - k};
    for (int p = 0; p < 3; ++p) inv.j_pair[p] = inv.i_pair[p] - inv.i;
    for (int j = 0; j < 3; ++j) {
        inv.s[j] = h[j] - alpha[j];
        inv.n[j] = binom(h[j] + 1, inv.s[j] + 1);
    }
    return inv;
}

DimensionInvariants invariants(const ProjectionSetup& setup) {
    return invariants_from_dims(setup.k, setup.h, setup.profile.alpha);
}

GenericityReport check_genericity(const ProjectionSetup& setup) {
    GenericityReport report;
    const std::array<RationalMatrix, 3> L = {setup.P[0].transpose(), setup.P[1].transpose(),
                                             setup.P[2].transpose()};
    static constexpr std::array<std::array<int, 3>, 3> splits = {{{1, 2, 3}, {1, 3, 2}, {2, 3, 1}}};
    for (const auto& [r, s, t] : splits) {
        const RationalMatrix meet = intersect_column_spaces(L[r - 1], L[s - 1]);
        if (rank(L[t - 1].hconcat(meet)) != setup.k + 1) {
            report.generic = false;
            report.witness = {r, s, t};
            return report;
        }
    }
    report.generic = true;
    return report;
}

RationalMatrix canonical_matrix(const DimensionInvariants& inv) {
    if (inv.i < 0) throw GenericityError("canonical form requires i >= 0");
    const int rows = inv.k + 1;
    const int j12 = inv.j(1, 2), j13 = inv.j(1, 3), j23 = inv.j(2, 3);
    // row bands (i, j12, j13, j23)
    const int band[4] = {0, inv.i, inv.i + j12, inv.i + j12 + j13};
    RationalMatrix phi(rows, (inv.h[0] + 1) + (inv.h[1] + 1) + (inv.h[2] + 1));

    int col = 0;
    auto put_identity = [&](int band_start, int height) {
        for (int t = 0; t < height; ++t) phi(band_start + t, col + t) = 1;
        col += height;
    };
    // block 1: bands (1, 2, 3); block 2: bands (1, 2, 4); block 3: bands (1, 3, 4)
    put_identity(band[0], inv.i);
    put_identity(band[1], j12);
    put_identity(band[2], j13);

    put_identity(band[0], inv.i);
    put_identity(band[1], j12);
    put_identity(band[3], j23);

    put_identity(band[0], inv.i);
    put_identity(band[2], j13);
    put_identity(band[3], j23);
    return phi;
}

ProjectionSetup canonical_setup(const DimensionInvariants& inv) {
    const RationalMatrix phi = canonical_matrix(inv);
    ProjectionSetup setup;
    setup.k = inv.k;
    setup.h = inv.h;
    setup.profile.alpha = inv.alpha;
    int col = 0;
    for (int j = 0; j < 3; ++j) {
        std::vector<int> cols(inv.h[j] + 1);
        for (int c = 0; c <= inv.h[j]; ++c) cols[c] = col + c;
        setup.P[j] = phi.select_columns(cols).transpose();
        col += inv.h[j] + 1;
    }
    setup.validate();
    return setup;
}

namespace {

// Appends to `current` those columns of `candidates` that enlarge its column
// space, until the target dimension is reached.
RationalMatrix extend_basis(const RationalMatrix& current, const RationalMatrix& candidates,
                            int target_dim) {
    RationalMatrix result = current;
    int dim = result.cols() == 0 ? 0 : rank(result);
    for (int c = 0; c < candidates.cols() && dim < target_dim; ++c) {
        const RationalMatrix trial = result.hconcat(candidates.select_columns({c}));
        if (rank(trial) > dim) {
            result = trial;
            ++dim;
        }
    }
    if (dim != target_dim) throw InternalError("extend_basis: target dimension not reached");
    return result;
}

}  // namespace

CanonicalTransform canonicalize(const ProjectionSetup& setup) {
    setup.validate();
    const GenericityReport generic = check_genericity(setup);
    if (!generic.generic) {
        throw GenericityError("setup violates the genericity assumption at views (" +
                              std::to_string(generic.witness[0]) + "," +
                              std::to_string(generic.witness[1]) + "," +
                              std::to_string(generic.witness[2]) + ")");
    }
    const DimensionInvariants inv = invariants(setup);

    const std::array<RationalMatrix, 3> L = {setup.P[0].transpose(), setup.P[1].transpose(),
                                             setup.P[2].transpose()};
    const RationalMatrix meet12 = intersect_column_spaces(L[0], L[1]);
    const RationalMatrix meet13 = intersect_column_spaces(L[0], L[2]);
    const RationalMatrix meet23 = intersect_column_spaces(L[1], L[2]);
    const RationalMatrix triple = intersect_column_spaces(meet12, L[2]);

    if (triple.cols() != inv.i || meet12.cols() != inv.i_rs(1, 2) ||
        meet13.cols() != inv.i_rs(1, 3) || meet23.cols() != inv.i_rs(2, 3))
        throw InternalError("canonicalize: intersection dimensions disagree with invariants");

    // Assemble G = [triple | ext(L1∩L2) | ext(L1∩L3) | ext(L2∩L3)]; its
    // inverse transpose maps each L_j onto the coordinate bands of the
    // canonical matrix, which is exactly what K has to do.
    RationalMatrix g = triple;
    g = extend_basis(g, meet12, inv.i + inv.j(1, 2));
    {
        const int before = g.cols();
        RationalMatrix ext = extend_basis(triple, meet13, inv.i + inv.j(1, 3));
        std::vector<int> added;
        for (int c = inv.i; c < ext.cols(); ++c) added.push_back(c);
        g = g.hconcat(ext.select_columns(added));
        if (g.cols() != before + inv.j(1, 3)) throw InternalError("canonicalize: band 3 size");
    }
    {
        const int before = g.cols();
        RationalMatrix ext = extend_basis(triple, meet23, inv.i + inv.j(2, 3));
        std::vector<int> added;
        for (int c = inv.i; c < ext.cols(); ++c) added.push_back(c);
        g = g.hconcat(ext.select_columns(added));
        if (g.cols() != before + inv.j(2, 3)) throw InternalError("canonicalize: band 4 size");
    }
    if (g.cols() != inv.k + 1) throw InternalError("canonicalize: G is not square");

    CanonicalTransform ct;
    ct.K = inverse(g.transpose());

    const int j12 = inv.j(1, 2), j13 = inv.j(1, 3), j23 = inv.j(2, 3);
    const int band_start[4] = {0, inv.i, inv.i + j12, inv.i + j12 + j13};
    const int band_len[4] = {inv.i, j12, j13, j23};
    auto band_columns = [&](std::initializer_list<int> bands) {
        std::vector<int> cols;
        for (int b : bands)
            for (int t = 0; t < band_len[b]; ++t) cols.push_back(band_start[b] + t);
        return cols;
    };
    const std::array<std::vector<int>, 3> blocks = {band_columns({0, 1, 2}),
                                                    band_columns({0, 1, 3}),
                                                    band_columns({0, 2, 3})};
    for (int j = 0; j < 3; ++j) {
        ct.H[j] = inverse(setup.P[j] * ct.K.select_columns(blocks[j]));
    }

    // Postcondition: the stacked transformed projections reproduce the
    // canonical matrix exactly.
    RationalMatrix assembled = (ct.H[0] * setup.P[0] * ct.K).transpose();
    assembled = assembled.hconcat((ct.H[1] * setup.P[1] * ct.K).transpose());
    assembled = assembled.hconcat((ct.H[2] * setup.P[2] * ct.K).transpose());
    if (!(assembled == canonical_matrix(inv)))
        throw InternalError("canonicalize: canonical identity failed");

    for (int j = 0; j < 3; ++j) {
        ct.V[j] = compound(inverse(ct.H[j]), inv.s[j] + 1).transpose();
        ct.Vinv[j] = compound(ct.H[j], inv.s[j] + 1).transpose();
    }
    return ct;
}

}  // namespace grasstensor
