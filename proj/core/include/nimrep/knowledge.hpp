#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nimrep/canonical.hpp"
#include "nimrep/int_matrix.hpp"
#include "nimrep/nimrep_engine.hpp"

namespace nimrep {

/// A known matrix-admissible pair that is excluded (or otherwise classified)
/// by an argument outside the matrix filters.
struct KnowledgeEntry {
  std::string id;
  int n_modulus = 1;
  int n_residue = 0;
  std::size_t rank = 0;
  IntMatrix theta_s;
  IntMatrix theta_t;
  std::string status;
  std::string citation;
  std::string note;

  bool applies_to(int n) const noexcept { return n % n_modulus == n_residue % n_modulus; }
  /// "n ≡ 0 mod 4"
  std::string pattern() const;
};

class KnowledgeTable {
 public:
  KnowledgeTable() = default;

  static KnowledgeTable parse(const std::string& json_text);
  static KnowledgeTable load(const std::filesystem::path& path);
  /// Uses `explicit_path` if given, else $NIMREP_KNOWLEDGE, else
  /// <exe dir>/../share/nimrep, else the source-tree copy, else the configured install copy.
  static KnowledgeTable load_default(const std::optional<std::filesystem::path>& explicit_path = std::nullopt);

  int version() const noexcept { return version_; }
  const std::vector<KnowledgeEntry>& entries() const noexcept { return entries_; }

  /// First entry whose pattern covers pair.n and whose canonical key equals `key`.
  const KnowledgeEntry* match(const MatrixPair& pair, const CanonicalKey& key) const;

 private:
  int version_ = 0;
  std::vector<KnowledgeEntry> entries_;
};

/// Citation used for admissible pairs that neither realize a cell nor match the table.
inline const std::string kUnknownCitation = "unknown: not covered by the knowledge table";

}  // namespace nimrep
