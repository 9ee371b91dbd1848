#pragma once

// Multigraded Hilbert polynomials of orbit closures in (P^1)^n, of their
// diagonal images, and of the nodal fibers indexed by stable trees.

#include <array>

#include "m0n/configurations.hpp"
#include "m0n/multilinear.hpp"
#include "m0n/trees.hpp"

namespace m0n {

/// prod (1 + t_i) over `labels`.
MultilinearPoly ambient_hilbert(const LabelSet& labels);
MultilinearPoly ambient_hilbert(int n);

/// sum over I with |I| <= 3 of prod_{i in I} t_i. Needs at least 3 labels.
MultilinearPoly generic_orbit_hilbert(const LabelSet& labels);
MultilinearPoly generic_orbit_hilbert(int n);

/// pK(t_K, sum t_L) + pL(t_L, sum t_K) - (1 + sum t_K)(1 + sum t_L), where
/// pK lives on K + {leg_k} and pL on L + {leg_l}.
MultilinearPoly glued_hilbert(const MultilinearPoly& pk, const MultilinearPoly& pl, const LabelSet& k,
                              const LabelSet& l, Label leg_k = kStar, Label leg_l = kStar);

/// Recursion over the tree: one vertex gives the generic polynomial, more
/// vertices split off a leaf component and glue.
MultilinearPoly tree_hilbert(const StableTree& t);
/// Same recursion, but the first split is taken at `edge` instead of at a
/// leaf. Used to check that the result does not depend on the split.
MultilinearPoly tree_hilbert_split_at(const StableTree& t, std::size_t edge);

/// q on variables 1..l (one per part), t_j -> sum_{i in P_j} t_i.
MultilinearPoly push_hilbert_along_partition(const MultilinearPoly& q, const SetPartition& p);

struct DegenerationPieces {
    MultilinearPoly z_prime;         // generic(n-1) with t_i -> t_i + t_n
    MultilinearPoly z_double_prime;  // (1 + t_i)(1 + t_n)(1 + sum of the rest)
    MultilinearPoly diagonal;        // (1 + t_i + t_n)(1 + sum of the rest)
};

/// The two components of the special fiber when x_n moves onto x_i, and
/// their intersection. 4 <= n and 1 <= i <= n-1, else IndexOutOfRange.
DegenerationPieces degeneration_pieces(int n, int i);

}  // namespace m0n
