#include "nimrep/nimrep_engine.hpp"

#include <algorithm>
#include <sstream>

#include "nimrep/errors.hpp"

namespace nimrep {

namespace {

std::string entry(const char* name, std::size_t i, std::size_t j) {
  return std::string(name) + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

std::string first_negative(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + m(i, j).str();
  return {};
}

std::string index_set(const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i] + 1);
  return out + "}";
}

FilterResult pass(FilterId id, std::string detail = {}) { return {id, FilterStatus::PASS, std::move(detail)}; }
FilterResult fail(FilterId id, std::string detail) { return {id, FilterStatus::FAIL, std::move(detail)}; }

}  // namespace

MatrixPair::MatrixPair(int n_, IntMatrix s, IntMatrix t) : n(n_), theta_s(std::move(s)), theta_t(std::move(t)) {
  if (n < 3) throw PreconditionError("D_n requires n >= 3, got " + std::to_string(n));
  if (!theta_s.is_square() || theta_s.rows() == 0) throw PreconditionError("theta_s must be a nonempty square matrix");
  if (theta_t.rows() != theta_s.rows() || theta_t.cols() != theta_s.cols())
    throw PreconditionError("theta_s and theta_t must have the same size");
  if (!theta_s.is_nonnegative() || !theta_t.is_nonnegative())
    throw PreconditionError("matrix pair entries must be nonnegative");
}

MatrixPair MatrixPair::permuted(const std::vector<std::size_t>& perm) const {
  return {n, theta_s.permuted(perm), theta_t.permuted(perm)};
}

std::string to_string(FilterId id) { return "F" + std::to_string(static_cast<int>(id) + 1); }

FilterId parse_filter_id(const std::string& text) {
  if (text.size() == 2 && (text[0] == 'F' || text[0] == 'f') && text[1] >= '1' && text[1] <= '7')
    return static_cast<FilterId>(text[1] - '1');
  throw ParseError("unknown filter \"" + text + "\" (expected F1..F7)", 0);
}

std::string to_string(FilterStatus s) {
  switch (s) {
    case FilterStatus::PASS: return "PASS";
    case FilterStatus::FAIL: return "FAIL";
    case FilterStatus::SKIPPED: return "SKIPPED";
  }
  return "?";
}

ExtendResult extend(const MatrixPair& pair) {
  const DihedralGroup g(pair.n);
  const int n = pair.n;
  std::vector<IntMatrix> family(g.order());
  family[0] = IntMatrix::identity(pair.rank());
  family[g.generator(Generator::S).index()] = pair.theta_s;
  family[g.generator(Generator::T).index()] = pair.theta_t;
  auto generator_matrix = [&](Generator x) -> const IntMatrix& { return x == Generator::S ? pair.theta_s : pair.theta_t; };

  // A_{x w'} where w' is the alternating word of length l-1 starting with y = other(x).
  auto step = [&](int length, Generator x) {
    const Generator y = other(x);
    const IntMatrix& tail = family[g.alternating(length - 1, y).index()];
    IntMatrix a = generator_matrix(x) * tail;
    if (length > 2) a -= family[g.alternating(length - 2, x).index()];
    return a;
  };

  std::optional<ExtendFailure> failure;
  for (int l = 2; l < n; ++l) {
    for (Generator x : {Generator::S, Generator::T}) {
      const GroupElement w = g.alternating(l, x);
      family[w.index()] = step(l, x);
      if (!failure && !family[w.index()].is_nonnegative())
        failure = ExtendFailure{FilterId::F2, w, "A_" + w.to_string() + " has " + first_negative(family[w.index()]), {}, {}};
    }
  }
  const GroupElement w0 = g.longest_element();
  family[w0.index()] = step(n, Generator::S);
  const IntMatrix via_t = step(n, Generator::T);
  if (!failure && !family[w0.index()].is_nonnegative())
    failure = ExtendFailure{FilterId::F2, w0, "A_w0 has " + first_negative(family[w0.index()]), {}, {}};
  std::optional<std::string> mismatch;
  if (via_t != family[w0.index()])
    mismatch = "s-first A_w0 = " + family[w0.index()].to_string() + " but t-first A_w0 = " + via_t.to_string();
  if (!failure && mismatch) failure = ExtendFailure{FilterId::F5, w0, *mismatch, {}, {}};
  if (failure) {
    failure->w0_mismatch = mismatch;
    failure->raw_family = std::move(family);
    return *failure;
  }
  return ExtendedRep{pair, std::move(family)};
}

bool FilterReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

std::optional<FilterId> FilterReport::first_failure() const {
  for (const auto& r : results)
    if (!r.passed()) return r.id;
  return std::nullopt;
}

const FilterResult& FilterReport::at(FilterId id) const {
  for (const auto& r : results)
    if (r.id == id) return r;
  throw PreconditionError("filter " + to_string(id) + " not in report");
}

FilterResult check_idempotent(const MatrixPair& pair) {
  for (const auto& [name, a] : {std::pair{"A_s", &pair.theta_s}, std::pair{"A_t", &pair.theta_t}}) {
    const IntMatrix sq = *a * *a;
    const IntMatrix twice = *a * BigInt(2);
    for (std::size_t i = 0; i < sq.rows(); ++i)
      for (std::size_t j = 0; j < sq.cols(); ++j)
        if (sq(i, j) != twice(i, j))
          return fail(FilterId::F1, std::string(name) + "^2 != 2" + name + " at " + entry("", i, j) + ": " +
                                        sq(i, j).str() + " vs " + twice(i, j).str());
  }
  return pass(FilterId::F1);
}

std::optional<std::pair<std::size_t, std::size_t>> missing_path(const IntMatrix& m) {
  const std::size_t r = m.rows();
  std::vector<std::vector<bool>> reach(r, std::vector<bool>(r, false));
  for (std::size_t i = 0; i < r; ++i) {
    reach[i][i] = true;
    for (std::size_t j = 0; j < r; ++j)
      if (m(j, i) != 0) reach[i][j] = true;
  }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < r; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (!reach[i][j]) return std::pair{i, j};
  return std::nullopt;
}

FilterResult check_transitive(const MatrixPair& pair) {
  if (auto gap = missing_path(pair.q()))
    return fail(FilterId::F3, "no path " + std::to_string(gap->first + 1) + "→" + std::to_string(gap->second + 1));
  return pass(FilterId::F3);
}

FilterResult check_group_relations(const MatrixPair& pair) {
  const IntMatrix id = IntMatrix::identity(pair.rank());
  const IntMatrix st = (pair.theta_s - id) * (pair.theta_t - id);
  if (st.pow(static_cast<unsigned>(pair.n)) != id)
    return fail(FilterId::F6, "((A_s - I)(A_t - I))^" + std::to_string(pair.n) + " != I");
  return pass(FilterId::F6);
}

FilterResult check_L3_form(const MatrixPair& pair) {
  const std::size_t r = pair.rank();
  const IntMatrix& a = pair.theta_s;
  const IntMatrix& b = pair.theta_t;
  if (r == 1) {
    const bool ok = (a(0, 0) == 0 || a(0, 0) == 2) && (b(0, 0) == 0 || b(0, 0) == 2);
    if (!ok) return fail(FilterId::F7, "rank 1 pair (" + a(0, 0).str() + "),(" + b(0, 0).str() + ") is not 0 or 2");
    return pass(FilterId::F7, "rank 1 degenerate form");
  }
  std::vector<std::size_t> s_set, t_set;
  for (std::size_t i = 0; i < r; ++i) {
    if (a(i, i) == 2)
      s_set.push_back(i);
    else if (a(i, i) == 0)
      t_set.push_back(i);
    else
      return fail(FilterId::F7, "diagonal entry " + a(i, i).str() + " at " + entry("A_s", i, i));
  }
  if (s_set.empty() || t_set.empty()) return fail(FilterId::F7, "A_s diagonal does not split the index set");
  auto in = [](const std::vector<std::size_t>& set, std::size_t i) { return std::binary_search(set.begin(), set.end(), i); };
  // A_s: 2I on S×S, zero rows on T. A_t: 2I on T×T, zero rows on S.
  auto check = [&](const IntMatrix& m, const char* name, const std::vector<std::size_t>& own) -> std::optional<std::string> {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        BigInt expected;
        bool fixed = true;
        if (!in(own, i))
          expected = 0;
        else if (in(own, j))
          expected = i == j ? 2 : 0;
        else
          fixed = false;
        if (fixed && m(i, j) != expected)
          return entry(name, i, j) + " = " + m(i, j).str() + ", expected " + expected.str();
      }
    }
    return std::nullopt;
  };
  if (auto bad = check(a, "A_s", s_set)) return fail(FilterId::F7, *bad);
  if (auto bad = check(b, "A_t", t_set)) return fail(FilterId::F7, *bad);
  return pass(FilterId::F7, "S=" + index_set(s_set) + ", T=" + index_set(t_set));
}

ApexSupport check_apex_support(const CellPartition& p, const std::vector<IntMatrix>& family) {
  const DihedralGroup g(p.n);
  const std::size_t cells = p.two_sided_cells.size();
  std::vector<bool> active(cells, false);
  for (std::size_t j = 0; j < cells; ++j) {
    const auto& members = p.two_sided_cells[j].members;
    const GroupElement* zero = nullptr;
    const GroupElement* nonzero = nullptr;
    for (const auto& w : members) {
      const bool z = family.at(w.index()).is_zero();
      if (z && !zero) zero = &w;
      if (!z && !nonzero) nonzero = &w;
    }
    if (zero && nonzero)
      return {fail(FilterId::F4, "A_" + zero->to_string() + " = 0 but A_" + nonzero->to_string() + " != 0 inside " +
                                     p.two_sided_cells[j].name),
              std::nullopt};
    active[j] = nonzero != nullptr;
  }
  for (std::size_t j = 0; j < cells; ++j) {
    if (!active[j]) continue;
    for (std::size_t i = 0; i < cells; ++i)
      if (i != j && p.two_sided_leq[i][j] && !active[i])
        return {fail(FilterId::F4, "support contains " + p.two_sided_cells[j].name + " but not " +
                                       p.two_sided_cells[i].name + " below it"),
                std::nullopt};
  }
  std::optional<std::size_t> apex;
  for (std::size_t j = 0; j < cells; ++j)
    if (active[j] && (!apex || p.two_sided_leq[*apex][j])) apex = j;
  std::string members;
  for (std::size_t j = 0; j < cells; ++j)
    if (active[j]) members += (members.empty() ? "" : "∪") + p.two_sided_cells[j].name;
  return {pass(FilterId::F4, "support = " + members), apex};
}

Evaluation evaluate_filters(const MatrixPair& pair, const CellPartition& partition, const FilterSelection& sel,
                            bool stop_at_first_failure) {
  Evaluation ev;
  std::optional<ExtendResult> ext;
  auto extension = [&]() -> const ExtendResult& {
    if (!ext) ext = extend(pair);
    return *ext;
  };
  auto family = [&]() -> const std::vector<IntMatrix>& {
    const ExtendResult& e = extension();
    if (const auto* rep = std::get_if<ExtendedRep>(&e)) return rep->family;
    return std::get<ExtendFailure>(e).raw_family;
  };
  for (FilterId id : kFilterOrder) {
    if (!sel.on(id)) {
      ev.report.results.push_back({id, FilterStatus::SKIPPED, {}});
      continue;
    }
    switch (id) {
      case FilterId::F1: ev.report.results.push_back(check_idempotent(pair)); break;
      case FilterId::F3: ev.report.results.push_back(check_transitive(pair)); break;
      case FilterId::F6: ev.report.results.push_back(check_group_relations(pair)); break;
      case FilterId::F7: ev.report.results.push_back(check_L3_form(pair)); break;
      case FilterId::F4: {
        ApexSupport a = check_apex_support(partition, family());
        ev.apex = a.apex;
        ev.report.results.push_back(std::move(a.result));
        break;
      }
      case FilterId::F2:
      case FilterId::F5: {
        const auto* f = std::get_if<ExtendFailure>(&extension());
        if (f && id == FilterId::F2 && f->filter == FilterId::F2)
          ev.report.results.push_back(fail(id, f->witness));
        else if (f && id == FilterId::F5 && f->w0_mismatch)
          ev.report.results.push_back(fail(id, *f->w0_mismatch));
        else
          ev.report.results.push_back(pass(id));
        break;
      }
    }
    if (stop_at_first_failure && !ev.report.results.back().passed()) return ev;
  }
  if (const auto* rep = std::get_if<ExtendedRep>(&extension())) {
    ev.extended = *rep;
    if (!sel.on(FilterId::F4)) ev.apex = check_apex_support(partition, rep->family).apex;
  }
  return ev;
}

IntPolynomial global_annihilator(const KLAlgebra& algebra, const CellPartition& p, std::size_t apex) {
  if (apex >= p.two_sided_cells.size()) throw PreconditionError("apex index out of range");
  const DihedralGroup& g = algebra.group();
  std::vector<std::size_t> kept;
  for (const auto& w : g.all_elements()) {
    const std::size_t j = p.two_sided_cell_of(w);
    if (p.two_sided_leq[j][apex]) kept.push_back(w.index());
  }
  const IntMatrix sum =
      algebra.left_action(g.generator(Generator::S)) + algebra.left_action(g.generator(Generator::T));
  IntMatrix restricted(kept.size(), kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j) restricted(i, j) = sum(kept[i], kept[j]);
  return squarefree_part(characteristic_polynomial(restricted));
}

IntPolynomial global_annihilator(int n, std::size_t apex) {
  const KLAlgebra algebra(n);
  const StructureConstantTable table(algebra);
  return global_annihilator(algebra, compute_cells(table), apex);
}

AnnihilatorCheck annihilator_check(const IntMatrix& q, const IntPolynomial& p) {
  const IntMatrix value = p.evaluate(q);
  for (std::size_t i = 0; i < value.rows(); ++i)
    for (std::size_t j = 0; j < value.cols(); ++j)
      if (value(i, j) != 0) return {false, "p(Q)" + entry("", i, j) + " = " + value(i, j).str()};
  return {true, "p(Q) = 0"};
}

DetIdentity det_identity(const std::vector<BigInt>& lambda, const std::vector<BigInt>& mu, const std::vector<BigInt>& v,
                         const std::vector<BigInt>& w) {
  const std::size_t k = lambda.size(), l = mu.size();
  if (k == 0 || l == 0) throw PreconditionError("det_identity requires k, l >= 1");
  if (v.size() != l || w.size() != k) throw PreconditionError("det_identity requires |v| = l and |w| = k");
  if (lambda[0] != 1 || mu[0] != 1) throw PreconditionError("det_identity requires lambda_1 = mu_1 = 1");
  for (const auto* vec : {&lambda, &mu, &v, &w})
    for (const auto& x : *vec)
      if (x <= 0) throw PreconditionError("det_identity parameters must be positive integers");

  const std::size_t m = k + l;
  IntMatrix q(m, m);
  for (std::size_t i = 0; i < m; ++i) q(i, i) = 2;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < l; ++j) q(i, k + j) = lambda[i] * v[j];
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < k; ++j) q(k + i, j) = mu[i] * w[j];

  BigInt lw = 0, mv = 0;
  for (std::size_t i = 0; i < k; ++i) lw += lambda[i] * w[i];
  for (std::size_t j = 0; j < l; ++j) mv += mu[j] * v[j];
  // m >= 2 always; 2^(m-2) exact.
  const BigInt formula = (BigInt(1) << m) - (BigInt(1) << (m - 2)) * lw * mv;
  return {q, determinant(q), formula};
}

}  // namespace nimrep
