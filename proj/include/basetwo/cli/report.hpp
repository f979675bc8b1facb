#pragma once

#include "basetwo/certify.hpp"
#include "basetwo/cli/construct.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace basetwo::cli {

inline constexpr const char* tool_version = "0.1.0";
inline constexpr int schema_version = 1;

struct GroupInfo {
  nlohmann::json spec;
  std::string label;
  std::string order;  // decimal
  std::size_t degree = 0;
  friend bool operator==(const GroupInfo&, const GroupInfo&) = default;
};

struct MinimalNormalRow {
  std::uint64_t order = 0;
  std::uint64_t prime = 0;  // 0 for nonabelian
  unsigned rank = 0;
  friend bool operator==(const MinimalNormalRow&, const MinimalNormalRow&) = default;
};

struct ProfileSummary {
  bool frattini_trivial = false;
  std::uint64_t frattini = 0, fitting = 0, socle = 0;
  std::optional<std::uint64_t> layer, complement;
  std::map<std::uint64_t, std::uint64_t> p_cores;  // prime -> |O_p(G)|
  std::vector<MinimalNormalRow> minimal_normals;
  std::map<std::uint64_t, unsigned> c_per_prime;
  bool c_defined = false;
  unsigned c = 0, r = 0;
  friend bool operator==(const ProfileSummary&, const ProfileSummary&) = default;
};

/// A subgroup with its base size certificate, in portable cycle notation.
struct CertificateRecord {
  std::optional<std::size_t> cls;
  std::uint64_t order = 0;
  std::vector<std::string> generators;
  std::uint32_t base = 0;
  std::vector<std::string> witnesses;
  std::optional<std::string> lower_bound_reason;
  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

struct AlphaSummary {
  std::uint64_t alpha = 0, beta = 0;
  std::size_t classes = 0, core_free_classes = 0;
  std::vector<CertificateRecord> witnesses;
  std::vector<std::size_t> beta_classes;
  friend bool operator==(const AlphaSummary&, const AlphaSummary&) = default;
};

struct MismatchRow {
  std::string theorem, predicted;
  std::uint64_t direct = 0;
  friend bool operator==(const MismatchRow&, const MismatchRow&) = default;
};

struct ConsistencySummary {
  bool ok = true;
  std::vector<MismatchRow> mismatches;
  friend bool operator==(const ConsistencySummary&, const ConsistencySummary&) = default;
};

struct Report {
  int schema_version = cli::schema_version;
  std::string tool_version = cli::tool_version;
  std::uint64_t seed = 0;
  std::string command;
  GroupInfo group;
  std::optional<ProfileSummary> profile;
  std::optional<AlphaSummary> alpha;
  std::vector<Verdict> verdicts;
  std::optional<ConsistencySummary> consistency;
  std::optional<CertificateRecord> basesize;
  std::optional<double> timing_seconds;
  friend bool operator==(const Report&, const Report&) = default;
};

struct SweepRow {
  GroupInfo group;
  std::uint64_t alpha = 0, beta = 0;
  bool consistent = true;
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepReport {
  int schema_version = cli::schema_version;
  std::string tool_version = cli::tool_version;
  std::uint64_t seed = 0;
  std::vector<SweepRow> rows;
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

GroupInfo group_info(const GroupSpec& spec, const PermGroup& g);
ProfileSummary summarize(const StructuralProfile& p);
CertificateRecord certificate_record(const EnumeratedGroup& g, const Subgroup& h, const BaseCertificate& cert,
                                     std::optional<std::size_t> cls);
AlphaSummary summarize(const Lattice& l, const AlphaReport& a);
ConsistencySummary summarize(const ConsistencyReport& c);

/// Rebuilds the subgroup and conjugators of a record inside `g` and checks
/// that the conjugates intersect trivially.
bool replay_record(const EnumeratedGroup& g, const CertificateRecord& r);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SweepReport& r);
SweepReport sweep_from_json(const nlohmann::json& j);

/// "json" (indented, trailing newline) or "text".
std::string emit(const Report& r, const std::string& format);
std::string emit(const SweepReport& r, const std::string& format);

}  // namespace basetwo::cli
