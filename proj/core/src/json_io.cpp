#include "nimrep/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "nimrep/errors.hpp"

namespace nimrep {

namespace {

std::string fixed(double x, int digits = 7) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -digits)) x = 0;  // avoid "-0.0000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

Json order_json(const CellOrder& leq) {
  Json out = Json::array();
  for (const auto& row : leq) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    out.push_back(std::move(r));
  }
  return out;
}

Json cells_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) {
    Json members = Json::array();
    for (const auto& w : c.members) members.push_back(w.to_string());
    out.push_back({{"name", c.name}, {"members", members}});
  }
  return out;
}

std::string members_text(const std::vector<GroupElement>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? ", " : "") + ws[i].to_string();
  return out + "}";
}

std::string complex_text(const std::complex<double>& z) {
  if (z.imag() == 0) return fixed(z.real());
  return fixed(z.real()) + (z.imag() < 0 ? " - " : " + ") + fixed(std::abs(z.imag())) + "i";
}

}  // namespace

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("invalid integer string \"" + j.get<std::string>() + "\"");
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError("matrix rows must be nonempty arrays");
  const std::size_t cols = j[0].size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = bigint_from_json(j[i][c]);
  }
  return m;
}

Json to_json(const GroupAlgebraElement& x) {
  Json coeffs = Json::object();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) coeffs[it->first.to_string()] = to_json(it->second);
  return {{"n", x.n()}, {"basis", to_string(x.basis())}, {"coeffs", coeffs}};
}

GroupAlgebraElement algebra_element_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const std::string b = j.at("basis").get<std::string>();
    if (b != "KL" && b != "GROUP") throw ParseError("basis must be \"KL\" or \"GROUP\"");
    const DihedralGroup g(n);
    GroupAlgebraElement x(n, b == "KL" ? Basis::KL : Basis::GROUP);
    for (const auto& [word, c] : j.at("coeffs").items()) x.add(g.parse(word), bigint_from_json(c));
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("algebra element: ") + e.what());
  }
}

Json to_json(const CellPartition& p) {
  return {{"n", p.n},
          {"left_cells", cells_json(p.left_cells)},
          {"right_cells", cells_json(p.right_cells)},
          {"two_sided_cells", cells_json(p.two_sided_cells)},
          {"left_leq", order_json(p.left_leq)},
          {"right_leq", order_json(p.right_leq)},
          {"two_sided_leq", order_json(p.two_sided_leq)}};
}

Json to_json(const CellModule& m, bool all_matrices) {
  Json basis = Json::array();
  for (const auto& w : m.basis) basis.push_back(w.to_string());
  Json matrices = Json::object();
  const DihedralGroup g(m.n);
  for (const auto& w : g.all_elements()) {
    if (!all_matrices && w.length() != 1) continue;
    matrices[w.to_string()] = to_json(m.matrix(w));
  }
  return {{"n", m.n}, {"cell", basis}, {"name", m.cell}, {"matrices", matrices}};
}

Json to_json(const MatrixPair& pair) {
  return {{"n", pair.n}, {"rank", pair.rank()}, {"theta_s", to_json(pair.theta_s)}, {"theta_t", to_json(pair.theta_t)}};
}

MatrixPair matrix_pair_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    MatrixPair pair(n, matrix_from_json(j.at("theta_s")), matrix_from_json(j.at("theta_t")));
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != pair.rank())
      throw ParseError("\"rank\" does not match the matrix size");
    return pair;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix pair: ") + e.what());
  }
}

MatrixPair parse_matrix_pair(const std::string& text, int n_override) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("matrix pair: ") + e.what(), e.byte);
  }
  if (n_override > 0) {
    if (!j.is_object()) throw ParseError("matrix pair must be a JSON object", 0);
    j["n"] = n_override;
  }
  return matrix_pair_from_json(j);
}

Json to_json(const FilterReport& r) {
  Json filters = Json::object();
  for (const auto& f : r.results) {
    Json entry = {{"status", to_string(f.status)}};
    if (!f.detail.empty()) entry[f.status == FilterStatus::FAIL ? "witness" : "detail"] = f.detail;
    filters[to_string(f.id)] = std::move(entry);
  }
  const auto first = r.first_failure();
  return {{"passed", r.passed()},
          {"first_failure", first ? Json(to_string(*first)) : Json(nullptr)},
          {"filters", filters}};
}

Json to_json(const Decomposition& d) {
  Json out = Json::object();
  for (const auto& [v, m] : d.terms()) out[v.name(d.n())] = m;
  return out;
}

Decomposition decomposition_from_json(int n, const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("decomposition must be an object");
  Decomposition d(n);
  for (const auto& [name, m] : j.items()) d.add(parse_simple(n, name), m.get<int>());
  return d;
}

Json to_json(const PerronAnalysis& p) {
  Json eigen = Json::array();
  for (const auto& z : p.eigenvalues) eigen.push_back({z.real(), z.imag()});
  return {{"irreducible", p.irreducible},
          {"spectral_radius", p.spectral_radius},
          {"top_eigenvalue_simple", p.top_eigenvalue_simple},
          {"positive_eigenvector", p.positive_eigenvector},
          {"eigenvector", p.eigenvector},
          {"eigenvalues", eigen},
          {"characteristic_polynomial", p.characteristic_polynomial.to_string()}};
}

Json to_json(const Candidate& c, const CellPartition& partition) {
  Json out = {{"theta_s", to_json(c.pair.theta_s)},
              {"theta_t", to_json(c.pair.theta_t)},
              {"canonical_key", to_hex(c.key)},
              {"tag", to_string(c.tag)}};
  switch (c.tag) {
    case Tag::REALIZED_CELL: out["cell"] = c.label; break;
    case Tag::MATRIX_ADMISSIBLE_UNREALIZED: out["citation"] = c.label; break;
    case Tag::REJECTED: out["failed_filter"] = c.label; break;
  }
  out["apex"] = c.apex ? Json(partition.two_sided_cells.at(*c.apex).name) : Json(nullptr);
  if (c.decomposition)
    out["decomposition"] = to_json(*c.decomposition);
  else
    out["decomposition"] = {{"error", c.decomposition_error}};
  out["det_q"] = to_json(c.det_q);
  if (c.perron) out["perron"] = to_json(*c.perron);
  if (c.annihilator)
    out["annihilator"] = {{"polynomial", c.annihilator->to_string()}, {"vanishes", c.annihilator_check->vanishes}};
  out["filters"] = to_json(c.filters);
  return out;
}

Json to_json(const RankSection& s, const CellPartition& partition) {
  Json rejections = Json::object();
  for (FilterId id : kFilterOrder) rejections[to_string(id)] = s.rejections[static_cast<std::size_t>(id)];
  Json candidates = Json::array();
  for (const auto& c : s.candidates) candidates.push_back(to_json(c, partition));
  return {{"rank", s.rank},
          {"explored", s.explored},
          {"duplicates", s.duplicates},
          {"rejections", rejections},
          {"guard_tripped", s.guard_tripped},
          {"candidates", candidates}};
}

Json to_json(const ClassificationReport& r, const CellPartition& partition) {
  Json filters = Json::object();
  for (int i = 0; i < 7; ++i) filters[to_string(static_cast<FilterId>(i))] = r.filters.on(static_cast<FilterId>(i));
  Json sections = Json::array();
  for (const auto& s : r.sections) sections.push_back(to_json(s, partition));
  return {{"n", r.n},
          {"entry_bound", r.entry_bound},
          {"completeness", "relative to entry bound"},
          {"filters", filters},
          {"knowledge_version", r.knowledge_version},
          {"resource_guard_tripped", r.guard_tripped()},
          {"sections", sections}};
}

std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], display_width(row[i]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - display_width(row[i]) + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_text(const CellPartition& p) {
  std::ostringstream os;
  os << "D_" << p.n << " cells\n";
  auto block = [&](const char* title, const std::vector<Cell>& cells) {
    os << title << ":\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : cells) rows.push_back({"  " + c.name, members_text(c.members)});
    os << aligned_table(rows);
  };
  block("left cells", p.left_cells);
  block("right cells", p.right_cells);
  block("two-sided cells", p.two_sided_cells);
  os << "two-sided order:";
  for (std::size_t i = 0; i < p.two_sided_cells.size(); ++i) os << (i ? " < " : " ") << p.two_sided_cells[i].name;
  os << "\nstrong regularity:\n";
  std::vector<std::vector<std::string>> rows;
  for (std::size_t j = 0; j < p.two_sided_cells.size(); ++j) {
    const StrongRegularity sr = is_strongly_regular(p, j);
    rows.push_back({"  " + p.two_sided_cells[j].name, sr.regular ? "yes" : "no", sr.witness});
  }
  os << aligned_table(rows);
  return os.str();
}

std::string render_text(const CellModule& m, bool all_matrices) {
  std::ostringstream os;
  os << "cell module " << m.cell << " of D_" << m.n << ", basis (";
  for (std::size_t i = 0; i < m.basis.size(); ++i) os << (i ? ", " : "") << m.basis[i].to_string();
  os << ")\n";
  const DihedralGroup g(m.n);
  std::vector<std::vector<std::string>> rows;
  for (const auto& w : g.all_elements()) {
    if (!all_matrices && w.length() != 1) continue;
    rows.push_back({"  A_" + w.to_string(), m.matrix(w).to_string()});
  }
  os << aligned_table(rows);
  return os.str();
}

std::string render_text(const FilterReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : r.results) rows.push_back({to_string(f.id), to_string(f.status), f.detail});
  return aligned_table(rows);
}

std::string render_text(const Candidate& c, const CellPartition& partition) {
  std::ostringstream os;
  os << "A_s = " << c.pair.theta_s.to_string() << "\nA_t = " << c.pair.theta_t.to_string() << "\n";
  os << "tag: " << to_string(c.tag) << " (" << c.label << ")\n";
  os << render_text(c.filters);
  if (c.apex) os << "apex: " << partition.two_sided_cells.at(*c.apex).name << "\n";
  if (c.decomposition)
    os << "decomposition: " << c.decomposition->to_string() << "\n";
  else
    os << "decomposition: " << c.decomposition_error << "\n";
  os << "det Q = " << c.det_q.str() << "\n";
  if (c.perron) {
    os << "perron: irreducible=" << (c.perron->irreducible ? "yes" : "no") << " rho=" << fixed(c.perron->spectral_radius)
       << " simple=" << (c.perron->top_eigenvalue_simple ? "yes" : "no")
       << " positive_eigenvector=" << (c.perron->positive_eigenvector ? "yes" : "no") << "\n";
    os << "eigenvalues:";
    for (const auto& z : c.perron->eigenvalues) os << " " << complex_text(z);
    os << "\n";
  }
  if (c.annihilator)
    os << "annihilator " << c.annihilator->to_string() << ": " << (c.annihilator_check->vanishes ? "p(Q) = 0" : c.annihilator_check->detail)
       << "\n";
  return os.str();
}

std::string render_text(const ClassificationReport& r, const CellPartition& partition) {
  std::ostringstream os;
  os << "n=" << r.n << "  entry bound E=" << r.entry_bound << " (complete relative to E)  filters:";
  for (FilterId id : kFilterOrder)
    if (r.filters.on(id)) os << " " << to_string(id);
  os << "  knowledge v" << r.knowledge_version << "\n";
  for (const auto& s : r.sections) {
    os << "\nrank " << s.rank << ": " << s.candidates.size() << " candidate" << (s.candidates.size() == 1 ? "" : "s")
       << " (explored " << s.explored << ", symmetric duplicates " << s.duplicates << "; rejected";
    bool any = false;
    for (FilterId id : kFilterOrder) {
      const auto count = s.rejections[static_cast<std::size_t>(id)];
      if (count == 0) continue;
      os << " " << to_string(id) << "=" << count;
      any = true;
    }
    if (!any) os << " none";
    os << ")" << (s.guard_tripped ? "  RESOURCE GUARD TRIPPED, partial" : "") << "\n";
    if (s.candidates.empty()) continue;
    std::vector<std::vector<std::string>> rows{
        {"  #", "theta_s", "theta_t", "tag", "cell/citation", "decomposition", "rho", "det Q", "apex", "p(Q)=0"}};
    for (std::size_t i = 0; i < s.candidates.size(); ++i) {
      const Candidate& c = s.candidates[i];
      rows.push_back({"  " + std::to_string(i + 1), c.pair.theta_s.to_string(), c.pair.theta_t.to_string(),
                      to_string(c.tag), c.label, c.decomposition ? c.decomposition->to_string() : "n/a",
                      c.perron ? fixed(c.perron->spectral_radius) : "n/a", c.det_q.str(),
                      c.apex ? partition.two_sided_cells.at(*c.apex).name : "-",
                      c.annihilator_check ? (c.annihilator_check->vanishes ? "yes" : "no") : "-"});
    }
    os << aligned_table(rows);
  }
  return os.str();
}

}  // namespace nimrep
