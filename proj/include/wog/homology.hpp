#pragma once

#include <cstdint>
#include <vector>

#include "wog/complex.hpp"
#include "wog/field.hpp"

namespace wog {

/// Reduced homology ranks H̃_{-1}, ..., H̃_{dim} over a field.
struct HomologyProfile {
  Field field;
  /// ranks[k + 1] is the rank of H̃_k.
  std::vector<std::size_t> ranks;

  std::size_t rank(int k) const {
    const long idx = static_cast<long>(k) + 1;
    return (idx < 0 || idx >= static_cast<long>(ranks.size())) ? 0 : ranks[static_cast<std::size_t>(idx)];
  }
  bool acyclic() const {
    for (auto r : ranks)
      if (r != 0) return false;
    return true;
  }
  bool operator==(const HomologyProfile&) const = default;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Exact rank over Q by fraction-free (Bareiss) elimination. Runs in 64-bit
/// arithmetic and restarts in arbitrary precision on overflow.
std::size_t rank_rational(IntMatrix m);

/// Rank over GF(p); p must be prime.
std::size_t rank_mod_p(IntMatrix m, std::uint32_t p);

std::size_t matrix_rank(IntMatrix m, const Field& field);

/// Reduced simplicial homology. The void complex yields {0}.
HomologyProfile homology_ranks(const SimplicialComplex& delta, const Field& field = {});

/// Reisner's criterion; the void complex counts as Cohen-Macaulay.
bool reisner_cm(const SimplicialComplex& delta, const Field& field = {});

/// Depth of the Stanley-Reisner ring: min |F| + 1 + i over faces F with
/// H̃_i(lk F) ≠ 0. Throws std::invalid_argument on the void complex.
std::size_t sr_depth(const SimplicialComplex& delta, const Field& field = {});

}  // namespace wog
