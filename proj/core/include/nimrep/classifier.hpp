#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nimrep/canonical.hpp"
#include "nimrep/cells.hpp"
#include "nimrep/dn_reps.hpp"
#include "nimrep/group_algebra.hpp"
#include "nimrep/knowledge.hpp"
#include "nimrep/nimrep_engine.hpp"
#include "nimrep/perron.hpp"

namespace nimrep {

enum class Tag { REALIZED_CELL, MATRIX_ADMISSIBLE_UNREALIZED, REJECTED };
std::string to_string(Tag tag);

struct Candidate {
  Candidate(MatrixPair pair_, CanonicalKey key_, FilterReport filters_, std::optional<ExtendedRep> extension_,
            std::optional<std::size_t> apex_)
      : pair(std::move(pair_)), key(std::move(key_)), filters(std::move(filters_)),
        extension(std::move(extension_)), apex(apex_) {}

  MatrixPair pair;
  CanonicalKey key;
  FilterReport filters;
  std::optional<ExtendedRep> extension;
  std::optional<std::size_t> apex;
  Tag tag = Tag::REJECTED;
  /// Cell name, citation, or the first failing filter.
  std::string label;

  std::optional<Decomposition> decomposition;
  std::string decomposition_error;
  std::optional<PerronAnalysis> perron;
  std::optional<IntPolynomial> annihilator;
  std::optional<AnnihilatorCheck> annihilator_check;
  BigInt det_q;
};

struct RankSection {
  int rank = 0;
  std::uint64_t explored = 0;
  /// Pairs rejected, by first failing filter (indexed by FilterId).
  std::array<std::uint64_t, 7> rejections{};
  /// Admissible pairs dropped as symmetric copies of an earlier one.
  std::uint64_t duplicates = 0;
  bool guard_tripped = false;
  /// Sorted by canonical key.
  std::vector<Candidate> candidates;
};

struct ClassifierConfig {
  std::vector<int> ranks{1, 2, 3};
  int entry_bound = 4;
  FilterSelection filters;
  unsigned jobs = 1;
  std::uint64_t max_states = 20'000'000;
};

struct ClassificationReport {
  int n = 0;
  int entry_bound = 0;
  FilterSelection filters;
  int knowledge_version = 0;
  std::vector<RankSection> sections;

  bool guard_tripped() const;
};

/// Holds the read-only data for one n (structure constants, cells, cell
/// modules and their keys) and runs the bounded search.
class Classifier {
 public:
  Classifier(int n, KnowledgeTable knowledge);

  int n() const noexcept { return n_; }
  const KLAlgebra& algebra() const noexcept { return algebra_; }
  const StructureConstantTable& table() const noexcept { return table_; }
  const CellPartition& partition() const noexcept { return partition_; }
  const std::vector<CellModule>& cell_modules() const noexcept { return modules_; }
  const KnowledgeTable& knowledge() const noexcept { return knowledge_; }

  /// Every pair in the search space passing all enabled filters, once per
  /// canonical class (first in search order), sorted by canonical key.
  /// Tags are not yet assigned. A pair that realizes a cell only after the
  /// s/t swap is replaced by its swap, so it matches the first such cell.
  RankSection enumerate(int rank, int entry_bound, const FilterSelection& filters, unsigned jobs = 1,
                        std::uint64_t max_states = ClassifierConfig{}.max_states) const;

  void match_cell_reps(std::vector<Candidate>& candidates) const;

  /// Evaluates, tags and annotates a single pair.
  Candidate assess(const MatrixPair& pair, const FilterSelection& filters = {}) const;

  ClassificationReport report(const ClassifierConfig& config) const;

  /// Apex index -> minimal annihilating polynomial (cached at construction).
  const IntPolynomial& annihilator(std::size_t apex) const { return annihilators_.at(apex); }

 private:
  void annotate(Candidate& c) const;
  void orient(Candidate& c, const FilterSelection& filters) const;

  int n_;
  KnowledgeTable knowledge_;
  KLAlgebra algebra_;
  StructureConstantTable table_;
  CellPartition partition_;
  std::vector<CellModule> modules_;
  std::vector<std::optional<CanonicalKey>> module_keys_;
  std::vector<IntPolynomial> annihilators_;
};

}  // namespace nimrep
