#include "nimrep/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "nimrep/errors.hpp"

namespace nimrep {

namespace {

using Visitor = std::function<bool(const MatrixPair&)>;
using Unit = std::function<void(const Visitor&)>;

IntMatrix from_values(std::size_t r, const std::vector<long long>& v) {
  IntMatrix m(r, r);
  for (std::size_t i = 0; i < r * r; ++i) m(i / r, i % r) = v[i];
  return m;
}

// Advances a little-endian-last odometer; false once it wraps around.
bool next_digits(std::vector<long long>& digits, long long bound) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] < bound) {
      ++digits[i];
      return true;
    }
    digits[i] = 0;
  }
  return false;
}

bool idempotent(std::size_t r, const std::vector<long long>& a) {
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      long long sum = 0;
      for (std::size_t k = 0; k < r; ++k) sum += a[i * r + k] * a[k * r + j];
      if (sum != 2 * a[i * r + j]) return false;
    }
  return true;
}

// Block search space: A_s = [[2I_k, B], [0, 0]], A_t = [[0, 0], [B', 2I_(r-k)]],
// one unit per (k, first row of B).
std::vector<Unit> block_units(int n, std::size_t r, long long bound) {
  std::vector<Unit> units;
  if (r == 1) {
    units.push_back([n](const Visitor& visit) {
      for (long long a : {0, 2})
        for (long long b : {0, 2})
          if (!visit(MatrixPair(n, IntMatrix{{a}}, IntMatrix{{b}}))) return;
    });
    return units;
  }
  for (std::size_t k = 1; k < r; ++k) {
    const std::size_t l = r - k;
    std::vector<long long> row(l, 0);
    do {
      units.push_back([n, r, k, l, bound, row](const Visitor& visit) {
        std::vector<long long> free((k - 1) * l + l * k, 0);
        do {
          IntMatrix s(r, r), t(r, r);
          for (std::size_t i = 0; i < k; ++i) s(i, i) = 2;
          for (std::size_t i = 0; i < l; ++i) t(k + i, k + i) = 2;
          for (std::size_t j = 0; j < l; ++j) s(0, k + j) = row[j];
          std::size_t at = 0;
          for (std::size_t i = 1; i < k; ++i)
            for (std::size_t j = 0; j < l; ++j) s(i, k + j) = free[at++];
          for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < k; ++j) t(k + i, j) = free[at++];
          if (!visit(MatrixPair(n, std::move(s), std::move(t)))) return;
        } while (next_digits(free, bound));
      });
    } while (next_digits(row, bound));
  }
  return units;
}

// Unrestricted space: pairs of r×r matrices with entries in [0, E], one unit per A_s.
std::vector<Unit> free_units(int n, std::size_t r, long long bound, bool require_idempotent) {
  auto matrices = std::make_shared<std::vector<IntMatrix>>();
  std::vector<long long> digits(r * r, 0);
  do {
    if (!require_idempotent || idempotent(r, digits)) matrices->push_back(from_values(r, digits));
  } while (next_digits(digits, bound));
  std::vector<Unit> units;
  for (std::size_t i = 0; i < matrices->size(); ++i) {
    units.push_back([n, i, matrices](const Visitor& visit) {
      for (const auto& t : *matrices)
        if (!visit(MatrixPair(n, (*matrices)[i], t))) return;
    });
  }
  return units;
}

struct UnitResult {
  std::vector<Candidate> admissible;  // in search order
  std::array<std::uint64_t, 7> rejections{};
};

}  // namespace

std::string to_string(Tag tag) {
  switch (tag) {
    case Tag::REALIZED_CELL: return "REALIZED_CELL";
    case Tag::MATRIX_ADMISSIBLE_UNREALIZED: return "MATRIX_ADMISSIBLE_UNREALIZED";
    case Tag::REJECTED: return "REJECTED";
  }
  return "?";
}

bool ClassificationReport::guard_tripped() const {
  return std::any_of(sections.begin(), sections.end(), [](const auto& s) { return s.guard_tripped; });
}

Classifier::Classifier(int n, KnowledgeTable knowledge)
    : n_(n), knowledge_(std::move(knowledge)), algebra_(n), table_(algebra_), partition_(compute_cells(table_)) {
  for (std::size_t i = 0; i < partition_.left_cells.size(); ++i) {
    modules_.push_back(cell_module(table_, partition_, i));
    const CellModule& m = modules_.back();
    if (m.basis.size() <= kMaxCanonicalRank)
      module_keys_.push_back(canonical_key(MatrixPair(n, m.theta_s(), m.theta_t())));
    else
      module_keys_.push_back(std::nullopt);
  }
  for (std::size_t j = 0; j < partition_.two_sided_cells.size(); ++j)
    annihilators_.push_back(global_annihilator(algebra_, partition_, j));
}

RankSection Classifier::enumerate(int rank, int entry_bound, const FilterSelection& filters, unsigned jobs,
                                  std::uint64_t max_states) const {
  if (rank < 1) throw PreconditionError("rank must be >= 1");
  if (static_cast<std::size_t>(rank) > kMaxCanonicalRank)
    throw PreconditionError("rank " + std::to_string(rank) + " exceeds the canonicalization cap of " +
                            std::to_string(kMaxCanonicalRank));
  if (entry_bound < 1) throw PreconditionError("entry bound must be >= 1");
  const std::size_t r = static_cast<std::size_t>(rank);
  const std::vector<Unit> units = filters.on(FilterId::F7) ? block_units(n_, r, entry_bound)
                                                           : free_units(n_, r, entry_bound, filters.on(FilterId::F1));

  std::vector<UnitResult> results(units.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> explored{0};
  std::atomic<bool> tripped{false};

  auto worker = [&] {
    for (std::size_t u = next++; u < units.size() && !tripped; u = next++) {
      UnitResult& out = results[u];
      units[u]([&](const MatrixPair& pair) {
        if (explored.fetch_add(1) >= max_states) {
          tripped = true;
          return false;
        }
        Evaluation ev = evaluate_filters(pair, partition_, filters, true);
        if (auto failed = ev.report.first_failure()) {
          ++out.rejections[static_cast<std::size_t>(*failed)];
          return true;
        }
        Candidate c(pair, canonical_key(pair), std::move(ev.report), std::move(ev.extended), ev.apex);
        out.admissible.push_back(std::move(c));
        return true;
      });
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(units.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  RankSection section;
  section.rank = rank;
  section.guard_tripped = tripped;
  section.explored = std::min<std::uint64_t>(explored, max_states);
  std::set<CanonicalKey> seen;
  for (auto& res : results) {
    for (std::size_t f = 0; f < 7; ++f) section.rejections[f] += res.rejections[f];
    for (auto& c : res.admissible) {
      if (seen.insert(c.key).second)
        section.candidates.push_back(std::move(c));
      else
        ++section.duplicates;
    }
  }
  std::sort(section.candidates.begin(), section.candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
  for (auto& c : section.candidates) orient(c, filters);
  return section;
}

void Classifier::orient(Candidate& c, const FilterSelection& filters) const {
  for (std::size_t i = 0; i < modules_.size(); ++i) {
    if (!module_keys_[i] || *module_keys_[i] != c.key) continue;
    const MatrixPair m(n_, modules_[i].theta_s(), modules_[i].theta_t());
    if (permutation_equivalent(m, c.pair)) return;
    const MatrixPair swapped = c.pair.swapped();
    Evaluation ev = evaluate_filters(swapped, partition_, filters, true);
    if (!ev.report.passed()) return;
    c.pair = swapped;
    c.filters = std::move(ev.report);
    c.extension = std::move(ev.extended);
    c.apex = ev.apex;
    return;
  }
}

void Classifier::match_cell_reps(std::vector<Candidate>& candidates) const {
  for (auto& c : candidates) {
    if (!c.filters.passed()) {
      c.tag = Tag::REJECTED;
      c.label = to_string(*c.filters.first_failure());
      continue;
    }
    c.tag = Tag::MATRIX_ADMISSIBLE_UNREALIZED;
    c.label = kUnknownCitation;
    // Keys ignore the s/t swap, so L_s and L_t share one; prefer the cell whose
    // matrices the pair is without swapping.
    bool realized = false, exact = false;
    for (std::size_t i = 0; i < modules_.size() && !exact; ++i) {
      if (!module_keys_[i] || *module_keys_[i] != c.key) continue;
      exact = permutation_equivalent(MatrixPair(n_, modules_[i].theta_s(), modules_[i].theta_t()), c.pair);
      if (!realized || exact) c.label = partition_.left_cells[i].name;
      c.tag = Tag::REALIZED_CELL;
      realized = true;
    }
    if (realized) continue;
    if (const KnowledgeEntry* e = knowledge_.match(c.pair, c.key)) {
      c.tag = e->status == "REALIZED_CELL" ? Tag::REALIZED_CELL : Tag::MATRIX_ADMISSIBLE_UNREALIZED;
      c.label = e->citation;
    }
  }
}

void Classifier::annotate(Candidate& c) const {
  const IntMatrix q = c.pair.q();
  c.det_q = determinant(q);
  c.perron = perron_analysis(q);
  try {
    c.decomposition = decompose(n_, c.pair.theta_s, c.pair.theta_t);
  } catch (const NotAModuleError& e) {
    c.decomposition_error = e.what();
  }
  if (c.apex) {
    c.annihilator = annihilators_.at(*c.apex);
    c.annihilator_check = annihilator_check(q, *c.annihilator);
  }
}

Candidate Classifier::assess(const MatrixPair& pair, const FilterSelection& filters) const {
  if (pair.n != n_) throw PreconditionError("pair is for n=" + std::to_string(pair.n) + ", classifier for n=" + std::to_string(n_));
  Evaluation ev = evaluate_filters(pair, partition_, filters, false);
  CanonicalKey key = pair.rank() <= kMaxCanonicalRank ? canonical_key(pair) : serialize(pair);
  std::vector<Candidate> one;
  one.emplace_back(pair, std::move(key), std::move(ev.report), std::move(ev.extended), ev.apex);
  match_cell_reps(one);
  annotate(one.front());
  return std::move(one.front());
}

ClassificationReport Classifier::report(const ClassifierConfig& config) const {
  ClassificationReport rep;
  rep.n = n_;
  rep.entry_bound = config.entry_bound;
  rep.filters = config.filters;
  rep.knowledge_version = knowledge_.version();
  std::vector<int> ranks = config.ranks;
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  for (int r : ranks) {
    RankSection section = enumerate(r, config.entry_bound, config.filters, config.jobs, config.max_states);
    match_cell_reps(section.candidates);
    for (auto& c : section.candidates) annotate(c);
    rep.sections.push_back(std::move(section));
    if (rep.sections.back().guard_tripped) break;
  }
  return rep;
}

}  // namespace nimrep
