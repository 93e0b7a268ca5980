#pragma once

#include <stdexcept>
#include <vector>

#include "wog/complex.hpp"
#include "wog/graph.hpp"
#include "wog/monomial.hpp"

namespace wog {

/// A monomial ideal held by its minimal generating set, sorted graded-lex.
///
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
public:
  /// The zero ideal in n variables.
  explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}
  /// Minimalizes `gens`; each must have n variables.
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial(n)}); }

  std::size_t ambient_size() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_squarefree() const;
  /// Coordinatewise maximum exponent over the generators.
  std::vector<Exponent> max_exponents() const;
  /// Generator supports; meaningful as a Stanley-Reisner presentation when squarefree.
  std::vector<VertexSet> supports() const;

  bool operator==(const MonomialIdeal&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Removes every monomial divisible by another one; sorts graded-lex.
MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

bool member(const MonomialIdeal& ideal, const Monomial& m);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);
bool contains(const MonomialIdeal& big, const MonomialIdeal& small);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, unsigned t);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Intersection of a list; the empty list gives the unit ideal.
MonomialIdeal intersect_all(std::size_t n, const std::vector<MonomialIdeal>& ideals);

/// I : m. Throws std::invalid_argument if m is the zero monomial (never the case
/// for exponent vectors); m must live in the same ring.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
/// I : x_v^∞, by repeated colon until stable.
MonomialIdeal saturate(const MonomialIdeal& ideal, Vertex v);
/// I : (∏_{v ∈ vars} x_v)^∞.
MonomialIdeal saturate(const MonomialIdeal& ideal, VertexSet vars);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Prime ideal (x_i | i ∈ s).
MonomialIdeal prime_ideal(std::size_t n, VertexSet s);

/// Coordinatewise exponent scaling. Every w_i must be at least 1.
MonomialIdeal w_action(const MonomialIdeal& ideal, const std::vector<Exponent>& w);

/// Minimal primes, as supports, sorted canonically.
std::vector<VertexSet> minimal_primes(const MonomialIdeal& ideal);

/// Every monomial prime of the form I : f with f in the box [0, max_exponents].
/// Throws std::invalid_argument on the zero or unit ideal and std::length_error
/// when the box exceeds `max_box` points.
std::vector<VertexSet> associated_primes(const MonomialIdeal& ideal, std::uint64_t max_box = 1'000'000);

/// Krull dimension of R / I. Throws std::invalid_argument on the unit ideal.
std::size_t krull_dim(const MonomialIdeal& ideal);

/// Stanley-Reisner complex of the radical.
SimplicialComplex radical_complex(const MonomialIdeal& ideal);

// --- Edge ideals of weighted oriented graphs ---

/// (x_i x_j^{ω(j)} | (i, j) ∈ E(D)).
MonomialIdeal edge_ideal(const WeightedOrientedGraph& d);

class NotStrongCover : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// (x_i, x_j^{ω(j)} | i ∈ L1, j ∈ C ∖ L1). Throws NotStrongCover unless c is a
/// strong vertex cover of d.
MonomialIdeal cover_ideal(const WeightedOrientedGraph& d, const StrongCover& c);

struct PrimaryComponent {
  StrongCover cover;
  MonomialIdeal ideal;
};

/// One irreducible component per strong vertex cover.
std::vector<PrimaryComponent> primary_decomposition(const WeightedOrientedGraph& d);

/// Intersection over minimal vertex covers C of I_C^t.
MonomialIdeal symbolic_power(const WeightedOrientedGraph& d, unsigned t);

/// I^{(t)} for an arbitrary monomial ideal: the intersection over minimal
/// primes P of I^t saturated by every variable outside P.
MonomialIdeal symbolic_power_by_localization(const MonomialIdeal& ideal, unsigned t);

}  // namespace wog
