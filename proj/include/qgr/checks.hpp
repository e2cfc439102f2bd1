// Whole-algebra checks shared by the command-line tool and the acceptance
// runner: defining relations, Hopf axioms, the pairing table and dual bases.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "qgr/hopf.hpp"
#include "qgr/pairing.hpp"
#include "qgr/report.hpp"

namespace qgr {

/// Straightening kills every non-Serre relation. Each Serre residual x,
/// together with e_j x and x e_j (f_j for the lower ones) up to
/// `pair_height`, pairs to zero with every opposite word of matching
/// content.
Report relations_check(const PairingContext& ctx, int pair_height = 4);

/// Coassociativity, counit and antipode identities on every generator and
/// on `random_count` seeded random elements of word length <= max_length;
/// multiplicativity of the coproduct on seeded random pairs.
Report hopf_axioms_check(const Algebra& alg, int random_count, unsigned long long seed = 1, int max_length = 3);

struct PairingTableEntry {
  Word f;
  Word e;
  Scalar value;
};

/// (f-word, e-word) for all equal-content pairs of height <= max_height.
std::vector<PairingTableEntry> pairing_table(const PairingContext& ctx, int max_height);
/// All four recursions agree on every pair of the table.
Report pairing_routes_check(const PairingContext& ctx, int max_height);

/// (v_j, u_k) = delta_jk and the rank of the graded basis.
Report dual_basis_check(const PairingContext& ctx, const Content& zeta);

/// Random element: 1 or 2 terms, each a word of length <= max_length in the
/// generators with a coefficient +-c r^a s^b.
Element random_element(std::mt19937_64& rng, const Algebra& alg, int max_length);

}  // namespace qgr
