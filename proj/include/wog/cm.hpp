#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wog/complex.hpp"
#include "wog/exec.hpp"
#include "wog/field.hpp"
#include "wog/ideal.hpp"

namespace wog {

/// Δ_a(I): faces F with x^a outside I localized at every x_i, i ∈ F.
/// Void exactly when x^a ∈ I.
SimplicialComplex degree_complex(const MonomialIdeal& ideal, const Monomial& a);

/// Stanley-Reisner complex of √(I : x^a); equal to degree_complex().
SimplicialComplex degree_complex_by_colon(const MonomialIdeal& ideal, const Monomial& a);

/// Minimal covers C of G with Σ_{i∈L1} a_i + Σ_{j∈C∖L1} ⌊a_j/ω(j)⌋ ≤ t − 1.
std::vector<VertexSet> symbolic_degree_covers(const WeightedOrientedGraph& d, unsigned t, const Monomial& a);

/// Facets of Δ_a(I(D)^{(t)}) read off from symbolic_degree_covers().
std::vector<VertexSet> symbolic_degree_facets(const WeightedOrientedGraph& d, unsigned t, const Monomial& a);

/// Upper Koszul complex: squarefree τ ≤ a with x^{a−τ} ∈ I.
SimplicialComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& a);

/// Multigraded Betti numbers of R/I, keyed by (homological index, degree).
struct BettiTable {
  Field field;
  std::map<std::pair<std::size_t, Monomial>, std::size_t> entries;

  std::size_t at(std::size_t i, const Monomial& a) const {
    auto it = entries.find({i, a});
    return it == entries.end() ? 0 : it->second;
  }
  std::size_t projective_dimension() const;
  bool operator==(const BettiTable&) const = default;
};

enum class BettiSupport {
  /// Distinct lcms of nonempty generator subsets.
  lcm_lattice,
  /// Every point of the exponent box [0, max_exponents].
  box,
};

struct BettiOptions {
  Field field;
  BettiSupport support = BettiSupport::lcm_lattice;
  /// Cap on the number of degrees visited.
  std::uint64_t max_degrees = 2'000'000;
  Exec exec = Exec::parallel;
};

/// Distinct lcms of nonempty subsets of G(I), sorted graded-lex.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::uint64_t cap = 2'000'000);

/// Throws std::invalid_argument on the unit ideal and std::length_error when
/// the degree cap is exceeded. β_{0,0} = 1 is always present.
BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options = {});

enum class DepthMethod { betti, colon, both };

std::string to_string(DepthMethod m);
DepthMethod parse_depth_method(const std::string& text);

struct CMOptions {
  Field field;
  DepthMethod method = DepthMethod::betti;
  /// Also decide Cohen-Macaulayness as unmixed + every √(I:f) Cohen-Macaulay.
  bool lemma_path = false;
  /// Refuse the colon method beyond this many box points.
  std::uint64_t max_box = 1'000'000;
  Exec exec = Exec::parallel;
};

/// What forced a non-Cohen-Macaulay verdict.
struct CMWitness {
  enum class Kind { betti, colon };
  Kind kind;
  /// Homological index (betti) or the depth of √(I:f) (colon).
  std::size_t index;
  /// Betti degree a, or the monomial f.
  Monomial degree;
};

struct CMReport {
  Field field;
  DepthMethod method = DepthMethod::betti;
  std::size_t dim = 0;
  std::optional<std::size_t> depth_betti;
  std::optional<std::size_t> depth_colon;
  std::optional<std::size_t> pd;
  bool cm = false;
  std::optional<CMWitness> witness;
  /// Filled when lemma_path is requested.
  std::optional<bool> unmixed;
  std::optional<bool> lemma_cm;
  /// Minimal primes equidimensional but embedded primes present.
  std::optional<bool> embedded_primes_flag;

  std::size_t depth() const { return depth_betti ? *depth_betti : *depth_colon; }
};

/// Depth of R/I as n − pd, plus the top Betti degree.
struct BettiDepth {
  std::size_t depth;
  std::size_t pd;
  Monomial top_degree;
};
BettiDepth depth_by_betti(const MonomialIdeal& ideal, const BettiOptions& options = {});

/// Depth of R/I as the minimum of depth R/√(I:f) over f ∉ I in the exponent box.
struct ColonDepth {
  std::size_t depth;
  /// Graded-lex least f attaining the minimum.
  Monomial witness;
};
ColonDepth depth_by_colon(const MonomialIdeal& ideal, const Field& field = {}, std::uint64_t max_box = 1'000'000,
                          Exec exec = Exec::parallel);

/// Two routes that are required to agree disagreed.
class OracleInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Throws std::invalid_argument on the unit ideal, OracleInconsistency if
/// requested routes disagree. The zero ideal is Cohen-Macaulay.
CMReport is_cm(const MonomialIdeal& ideal, const CMOptions& options = {});

}  // namespace wog
