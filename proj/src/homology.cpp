#include "wog/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace wog {

namespace {

struct Overflow {};

std::int64_t checked_det2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  std::int64_t ab = 0;
  std::int64_t cd = 0;
  std::int64_t diff = 0;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
      __builtin_sub_overflow(ab, cd, &diff))
    throw Overflow{};
  return diff;
}

template <class Int>
Int det2(const Int& a, const Int& b, const Int& c, const Int& d) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    return checked_det2(a, b, c, d);
  } else {
    return a * b - c * d;
  }
}

// Fraction-free row echelon form; every intermediate entry is a minor of the
// input, so each division by the previous pivot is exact.
template <class Int>
std::size_t bareiss_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const Int& p = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Int lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = det2<Int>(p, m[i][j], lead, m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_rational(IntMatrix m) {
  try {
    return bareiss_rank<std::int64_t>(m);
  } catch (const Overflow&) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> big;
    big.reserve(m.size());
    for (const auto& row : m) big.emplace_back(row.begin(), row.end());
    return bareiss_rank<cpp_int>(std::move(big));
  }
}

std::size_t rank_mod_p(IntMatrix m, std::uint32_t p) {
  if (m.empty()) return 0;
  const auto mod = static_cast<std::int64_t>(p);
  for (auto& row : m)
    for (auto& x : row) x = ((x % mod) + mod) % mod;
  auto inverse = [mod](std::int64_t a) {
    // Fermat: a^(p-2).
    std::int64_t result = 1;
    std::int64_t base = a;
    for (std::int64_t e = mod - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % mod;
      base = base * base % mod;
    }
    return result;
  };
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t inv = inverse(m[rank][c]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::int64_t factor = m[i][c] * inv % mod;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - factor * m[rank][j]) % mod + mod) % mod;
    }
    ++rank;
  }
  return rank;
}

std::size_t matrix_rank(IntMatrix m, const Field& field) {
  return field.is_rational() ? rank_rational(std::move(m)) : rank_mod_p(std::move(m), field.characteristic());
}

HomologyProfile homology_ranks(const SimplicialComplex& delta, const Field& field) {
  HomologyProfile profile;
  profile.field = field;
  if (delta.is_void()) {
    profile.ranks = {0};
    return profile;
  }
  const int top = delta.dim();
  // by_dim[k + 1] lists the k-faces.
  std::vector<std::vector<VertexSet>> by_dim(static_cast<std::size_t>(top) + 2);
  for (VertexSet f : delta.faces()) by_dim[f.size()].push_back(f);

  // boundary_rank[k] = rank of the boundary map from k-faces to (k-1)-faces, k >= 0.
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 0; k <= top; ++k) {
    const auto& cells = by_dim[static_cast<std::size_t>(k) + 1];
    const auto& facets = by_dim[static_cast<std::size_t>(k)];
    std::unordered_map<std::uint32_t, std::size_t> row_of;
    for (std::size_t i = 0; i < facets.size(); ++i) row_of[facets[i].bits()] = i;
    IntMatrix m(facets.size(), std::vector<std::int64_t>(cells.size(), 0));
    for (std::size_t j = 0; j < cells.size(); ++j) {
      std::int64_t sign = 1;
      for (Vertex v : cells[j].members()) {
        m[row_of.at((cells[j] - VertexSet{v}).bits())][j] = sign;
        sign = -sign;
      }
    }
    boundary_rank[static_cast<std::size_t>(k)] = matrix_rank(std::move(m), field);
  }
  profile.ranks.resize(static_cast<std::size_t>(top) + 2);
  for (int k = -1; k <= top; ++k) {
    const std::size_t cells = by_dim[static_cast<std::size_t>(k + 1)].size();
    const std::size_t out = k >= 0 ? boundary_rank[static_cast<std::size_t>(k)] : 0;
    const std::size_t in = k + 1 <= top ? boundary_rank[static_cast<std::size_t>(k + 1)] : 0;
    profile.ranks[static_cast<std::size_t>(k + 1)] = cells - out - in;
  }
  return profile;
}

bool reisner_cm(const SimplicialComplex& delta, const Field& field) {
  if (delta.is_void()) return true;
  for (VertexSet f : delta.faces()) {
    const SimplicialComplex lk = link(delta, f);
    const HomologyProfile h = homology_ranks(lk, field);
    for (int i = -1; i < lk.dim(); ++i)
      if (h.rank(i) != 0) return false;
  }
  return true;
}

std::size_t sr_depth(const SimplicialComplex& delta, const Field& field) {
  if (delta.is_void()) throw std::invalid_argument("depth of the void complex is undefined");
  std::size_t best = static_cast<std::size_t>(delta.dim() + 1);
  for (VertexSet f : delta.faces()) {
    if (f.size() >= best) continue;  // |F| + 1 + i >= |F| for every i >= -1
    const SimplicialComplex lk = link(delta, f);
    const HomologyProfile h = homology_ranks(lk, field);
    for (int i = -1; i <= lk.dim(); ++i) {
      if (h.rank(i) != 0) {
        best = std::min(best, f.size() + static_cast<std::size_t>(1 + i));
        break;
      }
    }
  }
  return best;
}

}  // namespace wog
