#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wog/cm.hpp"
#include "wog/graph.hpp"
#include "wog/ideal.hpp"

namespace wog {

/// One structural obstruction, e.g. {"odd_cycle_length", 3}. Vertex-valued
/// reasons carry 1-based labels.
struct Reason {
  std::string kind;
  long value = 0;
  bool operator==(const Reason&) const = default;
};

/// Everything needed to reproduce a structural/oracle disagreement.
struct Counterexample {
  std::string theorem;
  WeightedOrientedGraph graph;
  unsigned t = 0;
  std::string message;
  std::vector<std::pair<std::string, MonomialIdeal>> ideals;
  std::optional<BettiTable> betti;
};

class DisagreementError : public std::runtime_error {
public:
  explicit DisagreementError(Counterexample bundle)
      : std::runtime_error(bundle.theorem + ": " + bundle.message), bundle_(std::move(bundle)) {}
  const Counterexample& bundle() const { return bundle_; }

private:
  Counterexample bundle_;
};

/// Whether I(D)^t = I(D)^{(t)}.
struct EqualityVerdict {
  unsigned t = 0;
  bool structural = false;
  std::vector<Reason> reasons;
  std::optional<bool> direct;
  /// Graded-lex least generator of I^{(t)} outside I^t.
  std::optional<Monomial> witness;
};

/// Structural test: every weighted vertex is a sink and the odd girth exceeds
/// 2t − 1. With verify, also compares the two ideals and throws
/// DisagreementError if the answers differ. Requires t ≥ 2.
EqualityVerdict powers_equal(const WeightedOrientedGraph& d, unsigned t, bool verify);

struct OracleRun {
  unsigned t;
  CMReport report;
};

struct CMVerdict {
  std::string theorem;
  /// nullopt means "all t".
  std::optional<unsigned> t;
  bool structural = false;
  /// Same predicate when isolated vertices are not discarded first.
  std::optional<bool> structural_literal;
  std::vector<Reason> reasons;
  std::vector<OracleRun> oracle;
  std::vector<unsigned> failing_t;
  std::optional<bool> agreement;
};

/// Symbolic powers CM for every t iff every component of G is complete.
/// Runs the oracle for t = 1..verify_up_to.
CMVerdict symbolic_cm_all_t(const WeightedOrientedGraph& d, unsigned verify_up_to, const CMOptions& options = {});

/// Cohen-Macaulayness of the ordinary power I(D)^t; t = nullopt asks about all t
/// and scans the oracle over 1..scan_to.
CMVerdict ordinary_cm(const WeightedOrientedGraph& d, std::optional<unsigned> t, bool verify,
                      const CMOptions& options = {}, unsigned scan_to = 3);

/// The oriented path 1-2-3-4 with weights (1, k, k, 1).
WeightedOrientedGraph example_family(unsigned k);

/// Lex-first a ∈ N^4 with ⌊a2/k⌋ + a3 ≥ t, a1 + a3 ≤ t − 1, a2 + a4 ≤ t − 1,
/// searched over a_i ≤ t·k.
std::optional<std::array<unsigned, 4>> family_system_solution(unsigned k, unsigned t);

struct FamilyScan {
  unsigned k = 0;
  std::vector<unsigned> cm_at;
  std::vector<unsigned> not_cm_at;
  std::vector<std::pair<unsigned, std::optional<std::array<unsigned, 4>>>> system;
  bool agreement = true;
};

/// Oracle on I^{(t)} for t = 1..scan_to compared against the inequality system
/// and the threshold t ≤ k.
FamilyScan scan_family(unsigned k, unsigned scan_to, const CMOptions& options = {});

struct SweepOptions {
  unsigned max_t = 3;
  CMOptions cm;
  bool equality = true;
  bool ordinary = true;
  bool symbolic = true;
  Exec exec = Exec::parallel;
};

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<Counterexample> disagreements;
  /// Witnesses from powers_equal and whether each passed the membership check.
  std::size_t witnesses = 0;
  std::size_t unsound_witnesses = 0;
};

/// Runs every theorem check on every graph; instances run concurrently.
SweepSummary sweep(const std::vector<WeightedOrientedGraph>& graphs, const SweepOptions& options = {});

}  // namespace wog
