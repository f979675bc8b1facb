#pragma once

#include "basetwo/basesize.hpp"
#include "basetwo/lattice.hpp"
#include "basetwo/structure.hpp"

#include <memory>
#include <string>
#include <vector>

namespace basetwo {

/// Builds and checks the structural profile; needs a complete lattice.
StructuralProfile profile(const Lattice& l);

struct Prediction {
  enum class Kind { none, exact, at_least };
  Kind kind = Kind::none;
  std::uint64_t value = 0;

  static Prediction exactly(std::uint64_t v) { return {Kind::exact, v}; }
  static Prediction at_least(std::uint64_t v) { return {Kind::at_least, v}; }
  bool admits(std::uint64_t alpha) const;
  /// "=1", ">=2" or "none".
  std::string to_string() const;
  friend bool operator==(const Prediction&, const Prediction&) = default;
};
Prediction parse_prediction(const std::string& s);

struct Condition {
  std::string label;
  bool holds = false;
  std::string witness;  // empty when nothing useful can be shown
  friend bool operator==(const Condition&, const Condition&) = default;
};

struct Verdict {
  std::string theorem;
  std::vector<Condition> hypotheses;
  bool hypotheses_met = false;
  std::vector<Condition> conditions;
  Prediction predicted;  // kind none unless hypotheses_met
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct CertifyOptions {
  /// Restrict the subgroup searches of the alpha = 0 criterion to subgroups normal in L.
  bool normal_j = true;
};

const std::vector<std::string>& theorem_ids();

Verdict check_conditions(const std::string& theorem, const Lattice& l, const StructuralProfile& prof,
                         const CertifyOptions& opts = {});

struct CountRow {
  std::string formula;
  std::uint64_t predicted = 0;
  std::uint64_t enumerated = 0;
  bool match = false;
};
/// Compares the number of core-free hyperplanes of O_p(G) with the closed form
/// for its module shape; empty when the shape is not one of the known ones.
std::vector<CountRow> count_crosscheck(const EnumeratedGroup& g, std::uint64_t p);

struct Mismatch {
  std::string theorem;
  Prediction predicted;
  std::uint64_t direct = 0;
};

struct ConsistencyReport {
  AlphaReport alpha;
  std::vector<Verdict> verdicts;  // every certifier, hypotheses met or not
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

ConsistencyReport consistency(const Lattice& l, const StructuralProfile& prof,
                              const AlphaOptions& aopts = {}, const CertifyOptions& copts = {});

}  // namespace basetwo
