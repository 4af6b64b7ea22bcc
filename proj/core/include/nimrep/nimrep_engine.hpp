#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nimrep/cells.hpp"
#include "nimrep/dihedral.hpp"
#include "nimrep/group_algebra.hpp"
#include "nimrep/int_matrix.hpp"
#include "nimrep/polynomial.hpp"

namespace nimrep {

/// Candidate action matrices of θ_s and θ_t on a rank r module.
struct MatrixPair {
  int n = 0;
  IntMatrix theta_s;
  IntMatrix theta_t;

  /// Validates n >= 3, equal square shapes, r >= 1 and nonnegative entries.
  MatrixPair(int n, IntMatrix theta_s, IntMatrix theta_t);

  std::size_t rank() const noexcept { return theta_s.rows(); }
  IntMatrix q() const { return theta_s + theta_t; }
  MatrixPair swapped() const { return {n, theta_t, theta_s}; }
  MatrixPair permuted(const std::vector<std::size_t>& perm) const;
  friend bool operator==(const MatrixPair&, const MatrixPair&) = default;
};

/// The full family A_w, indexed by GroupElement::index().
struct ExtendedRep {
  MatrixPair base;
  std::vector<IntMatrix> family;

  const IntMatrix& matrix(const GroupElement& w) const { return family.at(w.index()); }
};

enum class FilterId { F1, F2, F3, F4, F5, F6, F7 };

std::string to_string(FilterId id);
FilterId parse_filter_id(const std::string& text);

/// Evaluation order used everywhere filters are combined.
inline constexpr std::array<FilterId, 7> kFilterOrder{FilterId::F1, FilterId::F7, FilterId::F3, FilterId::F6,
                                                      FilterId::F4, FilterId::F2, FilterId::F5};

struct ExtendFailure {
  FilterId filter;  // F2 or F5
  GroupElement element;
  std::string witness;
  /// Set whenever the two words for w0 disagree, even if F2 failed first.
  std::optional<std::string> w0_mismatch;
  /// Every A_w as produced by the recursion, negative entries included; A_w0 uses the s-first word.
  std::vector<IntMatrix> raw_family;
};

using ExtendResult = std::variant<ExtendedRep, ExtendFailure>;

/// A_st = A_s A_t, A_ts = A_t A_s and A_{xw} = A_x A_w - A_{yw} by increasing length.
/// The longest element is reached by both words; they must agree.
ExtendResult extend(const MatrixPair& pair);

enum class FilterStatus { PASS, FAIL, SKIPPED };
std::string to_string(FilterStatus s);

struct FilterResult {
  FilterId id;
  FilterStatus status;
  /// Witness on failure, short description on success.
  std::string detail;

  bool passed() const noexcept { return status != FilterStatus::FAIL; }
};

/// Results in kFilterOrder.
struct FilterReport {
  std::vector<FilterResult> results;

  bool passed() const;
  std::optional<FilterId> first_failure() const;
  const FilterResult& at(FilterId id) const;
};

FilterResult check_idempotent(const MatrixPair& pair);                       // F1
FilterResult check_transitive(const MatrixPair& pair);                       // F3
FilterResult check_group_relations(const MatrixPair& pair);                  // F6
FilterResult check_L3_form(const MatrixPair& pair);                          // F7

struct ApexSupport {
  FilterResult result;
  /// Index of the top two-sided cell acting nonzero, when the support is a down-closed union of cells.
  std::optional<std::size_t> apex;
};

/// F4 on a (possibly raw) family.
ApexSupport check_apex_support(const CellPartition& partition, const std::vector<IntMatrix>& family);
inline ApexSupport check_apex_support(const CellPartition& partition, const ExtendedRep& rep) {
  return check_apex_support(partition, rep.family);
}

struct FilterSelection {
  std::array<bool, 7> enabled{true, true, true, true, true, true, true};

  bool on(FilterId id) const { return enabled[static_cast<std::size_t>(id)]; }
  void set(FilterId id, bool value) { enabled[static_cast<std::size_t>(id)] = value; }
};

struct Evaluation {
  FilterReport report;
  std::optional<ExtendedRep> extended;
  std::optional<std::size_t> apex;
};

/// Runs the enabled filters in kFilterOrder. With `stop_at_first_failure` the
/// report ends at the first FAIL (the extension is only computed if reached).
Evaluation evaluate_filters(const MatrixPair& pair, const CellPartition& partition,
                            const FilterSelection& selection = {}, bool stop_at_first_failure = false);

/// Minimal polynomial of s̲ + t̲ on Z[D_n] modulo the span of the KL basis
/// elements in two-sided cells above `apex`.
IntPolynomial global_annihilator(const KLAlgebra& algebra, const CellPartition& partition, std::size_t apex);
IntPolynomial global_annihilator(int n, std::size_t apex);

struct AnnihilatorCheck {
  bool vanishes = false;
  std::string detail;
};

/// p(Q) evaluated exactly.
AnnihilatorCheck annihilator_check(const IntMatrix& q, const IntPolynomial& p);

struct DetIdentity {
  IntMatrix q;
  BigInt direct;
  BigInt formula;
};

/// Q = [[2I_k, λvᵀ], [μwᵀ, 2I_l]]; formula 2^m - 2^(m-2)(Σλ_i w_i)(Σμ_j v_j) with m = k + l.
DetIdentity det_identity(const std::vector<BigInt>& lambda, const std::vector<BigInt>& mu,
                         const std::vector<BigInt>& v, const std::vector<BigInt>& w);

/// Strong connectivity of the graph with an edge i → j whenever m(j,i) != 0.
/// On failure returns the first (i, j) without a path.
std::optional<std::pair<std::size_t, std::size_t>> missing_path(const IntMatrix& m);

}  // namespace nimrep
