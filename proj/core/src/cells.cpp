#include "nimrep/cells.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nimrep/errors.hpp"

namespace nimrep {

namespace {

using Relation = std::vector<std::vector<bool>>;

void transitive_closure(Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
}

struct Classes {
  std::vector<std::vector<std::size_t>> members;  // element indices, ascending
  std::vector<std::size_t> class_of;
};

Classes equivalence_classes(const Relation& r) {
  const std::size_t n = r.size();
  Classes c;
  c.class_of.assign(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    if (c.class_of[u] != n) continue;
    const std::size_t id = c.members.size();
    c.members.emplace_back();
    for (std::size_t v = u; v < n; ++v) {
      if (c.class_of[v] == n && r[u][v] && r[v][u]) {
        c.class_of[v] = id;
        c.members.back().push_back(v);
      }
    }
  }
  return c;
}

CellOrder induced_order(const Classes& c, const Relation& r) {
  const std::size_t k = c.members.size();
  CellOrder leq(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) leq[i][j] = r[c.members[i].front()][c.members[j].front()];
  return leq;
}

std::vector<Cell> make_cells(const DihedralGroup& group, const Classes& c, const std::string& prefix) {
  std::vector<Cell> cells;
  for (const auto& m : c.members) {
    Cell cell;
    for (std::size_t i : m) cell.members.push_back(group.element_at(i));
    cell.name = prefix + cell.members.front().to_string();
    cells.push_back(std::move(cell));
  }
  return cells;
}

// Reorders two-sided classes bottom to top (by number of cells below).
void sort_two_sided(Classes& c, const Relation& r) {
  CellOrder leq = induced_order(c, r);
  std::vector<std::size_t> order(c.members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto below = [&](std::size_t i) {
    return std::count_if(leq.begin(), leq.end(), [&](const auto& row) { return &row != &leq[i] && row[i]; });
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below(a) < below(b); });
  Classes sorted;
  sorted.class_of.assign(c.class_of.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    sorted.members.push_back(c.members[order[pos]]);
    for (std::size_t e : sorted.members.back()) sorted.class_of[e] = pos;
  }
  c = std::move(sorted);
}

CellPartition assemble(const DihedralGroup& group, const Relation& left, const Relation& right,
                       const Relation& two_sided) {
  CellPartition p;
  p.n = group.n();
  const Classes lc = equivalence_classes(left);
  const Classes rc = equivalence_classes(right);
  Classes jc = equivalence_classes(two_sided);
  sort_two_sided(jc, two_sided);
  p.left_cells = make_cells(group, lc, "L_");
  p.right_cells = make_cells(group, rc, "R_");
  p.two_sided_cells = make_cells(group, jc, "J");
  for (std::size_t i = 0; i < p.two_sided_cells.size(); ++i) p.two_sided_cells[i].name = "J" + std::to_string(i + 1);
  p.left_leq = induced_order(lc, left);
  p.right_leq = induced_order(rc, right);
  p.two_sided_leq = induced_order(jc, two_sided);
  return p;
}

std::size_t find_cell(const std::vector<Cell>& cells, const GroupElement& w) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (std::find(cells[i].members.begin(), cells[i].members.end(), w) != cells[i].members.end()) return i;
  throw PreconditionError("element " + w.to_string() + " not found in any cell");
}

// Members sharing a right cell with the minimal element come first, each group by length:
// L_s at n=4 becomes (s, sts, ts).
std::vector<GroupElement> module_basis(const Cell& cell) {
  std::vector<GroupElement> basis = cell.members;
  const GroupElement& head = basis.front();
  if (head.is_identity() || head.is_longest()) return basis;
  auto key = [&](const GroupElement& w) { return std::pair(w.first_letter() != head.first_letter(), w.index()); };
  std::stable_sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return basis;
}

std::string join_members(const std::vector<GroupElement>& members) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += members[i].to_string();
  }
  return out;
}

}  // namespace

std::size_t CellPartition::left_cell_of(const GroupElement& w) const { return find_cell(left_cells, w); }
std::size_t CellPartition::right_cell_of(const GroupElement& w) const { return find_cell(right_cells, w); }
std::size_t CellPartition::two_sided_cell_of(const GroupElement& w) const { return find_cell(two_sided_cells, w); }

std::size_t CellPartition::left_cell_index(const std::string& name) const {
  std::string key = name;
  // Accept "Ls", "L_s", "Lw0".
  if (key.size() > 1 && key[0] == 'L' && key[1] != '_') key = "L_" + key.substr(1);
  for (std::size_t i = 0; i < left_cells.size(); ++i)
    if (left_cells[i].name == key) return i;
  throw PreconditionError("unknown left cell \"" + name + "\"");
}

const Cell& CellPartition::left_cell(const std::string& name) const { return left_cells[left_cell_index(name)]; }

std::size_t CellPartition::two_sided_index(const std::string& name) const {
  for (std::size_t i = 0; i < two_sided_cells.size(); ++i)
    if (two_sided_cells[i].name == name) return i;
  throw PreconditionError("unknown two-sided cell \"" + name + "\"");
}

CellPartition compute_cells(const StructureConstantTable& table) {
  const DihedralGroup group(table.n());
  const auto elements = group.all_elements();
  const std::size_t order = elements.size();
  Relation left(order, std::vector<bool>(order, false));
  Relation right = left;
  for (const auto& h : elements) {
    for (const auto& u : elements) {
      for (const auto& [v, c] : table.product(h, u).terms()) left[u.index()][v.index()] = true;
      for (const auto& [v, c] : table.product(u, h).terms()) right[u.index()][v.index()] = true;
    }
  }
  for (std::size_t i = 0; i < order; ++i) left[i][i] = right[i][i] = true;
  transitive_closure(left);
  transitive_closure(right);
  Relation two_sided(order, std::vector<bool>(order, false));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) two_sided[i][j] = left[i][j] || right[i][j];
  transitive_closure(two_sided);
  return assemble(group, left, right, two_sided);
}

CellPartition closed_form_cells(const DihedralGroup& group) {
  const auto elements = group.all_elements();
  const std::size_t order = elements.size();
  // Block label: 0 = e, 1 = ends (starts) in s, 2 = ends (starts) in t, 3 = w0.
  auto label = [](const GroupElement& w, bool by_last) -> int {
    if (w.is_identity()) return 0;
    if (w.is_longest()) return 3;
    const Generator g = by_last ? w.last_letter() : w.first_letter();
    return g == Generator::S ? 1 : 2;
  };
  auto relation = [&](bool by_last) {
    Relation r(order, std::vector<bool>(order, false));
    for (const auto& u : elements) {
      for (const auto& v : elements) {
        const int a = label(u, by_last), b = label(v, by_last);
        r[u.index()][v.index()] = a == b || a == 0 || b == 3;
      }
    }
    return r;
  };
  const Relation left = relation(true);
  const Relation right = relation(false);
  Relation two_sided(order, std::vector<bool>(order, false));
  for (const auto& u : elements) {
    for (const auto& v : elements) {
      auto tier = [](const GroupElement& w) { return w.is_identity() ? 0 : (w.is_longest() ? 2 : 1); };
      two_sided[u.index()][v.index()] = tier(u) <= tier(v);
    }
  }
  return assemble(group, left, right, two_sided);
}

bool same_cells(const CellPartition& a, const CellPartition& b) {
  auto same_members = [](const std::vector<Cell>& x, const std::vector<Cell>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].members != y[i].members) return false;
    return true;
  };
  return a.n == b.n && same_members(a.left_cells, b.left_cells) && same_members(a.right_cells, b.right_cells) &&
         same_members(a.two_sided_cells, b.two_sided_cells) && a.left_leq == b.left_leq &&
         a.right_leq == b.right_leq && a.two_sided_leq == b.two_sided_leq;
}

StrongRegularity is_strongly_regular(const CellPartition& p, std::size_t j) {
  if (j >= p.two_sided_cells.size()) throw PreconditionError("two-sided cell index out of range");
  const auto& members = p.two_sided_cells[j].members;
  auto inside = [&](const Cell& c) { return p.two_sided_cell_of(c.members.front()) == j; };
  std::vector<std::size_t> lefts, rights;
  for (std::size_t i = 0; i < p.left_cells.size(); ++i)
    if (inside(p.left_cells[i])) lefts.push_back(i);
  for (std::size_t i = 0; i < p.right_cells.size(); ++i)
    if (inside(p.right_cells[i])) rights.push_back(i);

  StrongRegularity out;
  auto comparable = [&](const std::vector<std::size_t>& ids, const std::vector<Cell>& cells,
                        const CellOrder& leq, const char* rel) {
    for (std::size_t a : ids)
      for (std::size_t b : ids)
        if (a != b && leq[a][b]) {
          out.regular = false;
          out.witness = cells[a].name + " " + rel + " " + cells[b].name;
          return true;
        }
    return false;
  };
  if (comparable(lefts, p.left_cells, p.left_leq, "<=_L")) return out;
  if (comparable(rights, p.right_cells, p.right_leq, "<=_R")) return out;
  for (std::size_t l : lefts) {
    for (std::size_t r : rights) {
      std::size_t size = 0;
      for (const auto& w : members)
        if (p.left_cell_of(w) == l && p.right_cell_of(w) == r) ++size;
      if (size != 1) {
        out.regular = false;
        out.intersection_size = size;
        out.witness = "|" + p.left_cells[l].name + " ∩ " + p.right_cells[r].name + "| = " + std::to_string(size);
        return out;
      }
    }
  }
  return out;
}

CellModule cell_module(const StructureConstantTable& table, const CellPartition& p, std::size_t index) {
  if (index >= p.left_cells.size()) throw PreconditionError("left cell index out of range");
  const DihedralGroup group(table.n());
  const Cell& cell = p.left_cells[index];
  CellModule m;
  m.n = table.n();
  m.cell = cell.name;
  m.basis = module_basis(cell);
  const std::size_t r = m.basis.size();
  std::map<GroupElement, std::size_t> position;
  for (std::size_t i = 0; i < r; ++i) position[m.basis[i]] = i;

  for (const auto& u : group.all_elements()) {
    IntMatrix a(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      for (const auto& [v, c] : table.product(u, m.basis[j]).terms()) {
        if (auto it = position.find(v); it != position.end()) {
          a(it->second, j) = c;
          continue;
        }
        const std::size_t vc = p.left_cell_of(v);
        if (!(p.left_leq[index][vc] && !p.left_leq[vc][index]))
          throw InternalError("projection onto " + cell.name + " drops " + v.to_string() +
                              ", which is not strictly above the cell");
      }
    }
    if (!a.is_nonnegative()) throw InternalError("negative entry in cell module " + cell.name);
    m.matrices.push_back(std::move(a));
  }
  return m;
}

CellModule right_cell_module(const StructureConstantTable& table, const CellPartition& p, std::size_t index) {
  if (index >= p.right_cells.size()) throw PreconditionError("right cell index out of range");
  const DihedralGroup group(table.n());
  const Cell& cell = p.right_cells[index];
  const std::size_t left_index = p.left_cell_of(group.inverse(cell.members.front()));
  const CellModule left = cell_module(table, p, left_index);

  CellModule m;
  m.n = table.n();
  m.cell = cell.name;
  for (const auto& w : left.basis) m.basis.push_back(group.inverse(w));
  const std::size_t r = m.basis.size();
  std::map<GroupElement, std::size_t> left_position;
  for (std::size_t i = 0; i < r; ++i) left_position[left.basis[i]] = i;
  std::vector<std::size_t> to_left(r);
  for (std::size_t i = 0; i < r; ++i) to_left[i] = left_position.at(group.inverse(m.basis[i]));

  for (const auto& u : group.all_elements()) {
    const IntMatrix& a = left.matrix(group.inverse(u));
    IntMatrix b(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) b(i, j) = a(to_left[i], to_left[j]);
    m.matrices.push_back(std::move(b));
  }
  return m;
}

std::string cell_diagram_dot(const CellPartition& p) {
  std::ostringstream os;
  os << "digraph cells_D" << p.n << " {\n";
  os << "  rankdir=TB;\n  node [shape=box];\n";
  const auto& js = p.two_sided_cells;
  for (const auto& j : js) os << "  " << j.name << " [label=\"" << j.name << ": " << join_members(j.members) << "\"];\n";
  for (std::size_t a = 0; a < js.size(); ++a) {
    for (std::size_t b = 0; b < js.size(); ++b) {
      if (a == b || !p.two_sided_leq[a][b] || p.two_sided_leq[b][a]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < js.size(); ++c) {
        if (c == a || c == b) continue;
        if (p.two_sided_leq[a][c] && !p.two_sided_leq[c][a] && p.two_sided_leq[c][b] && !p.two_sided_leq[b][c])
          covered = false;
      }
      if (covered) os << "  " << js[a].name << " -> " << js[b].name << ";\n";
    }
  }
  for (std::size_t j = 0; j < js.size(); ++j) {
    if (js[j].members.size() < 2) continue;
    os << "  subgraph cluster_" << js[j].name << " {\n";
    os << "    label=\"" << js[j].name << " left/right cells\";\n";
    std::vector<std::string> nodes;
    for (std::size_t l = 0; l < p.left_cells.size(); ++l) {
      if (p.two_sided_cell_of(p.left_cells[l].members.front()) != j) continue;
      for (std::size_t r = 0; r < p.right_cells.size(); ++r) {
        if (p.two_sided_cell_of(p.right_cells[r].members.front()) != j) continue;
        std::vector<GroupElement> meet;
        for (const auto& w : js[j].members)
          if (p.left_cell_of(w) == l && p.right_cell_of(w) == r) meet.push_back(w);
        if (meet.empty()) continue;
        const std::string id = js[j].name + "_" + p.left_cells[l].name + "_" + p.right_cells[r].name;
        os << "    " << id << " [label=\"" << p.left_cells[l].name << " ∩ " << p.right_cells[r].name << ": "
           << join_members(meet) << "\"];\n";
        nodes.push_back(id);
      }
    }
    os << "  }\n";
    for (const auto& id : nodes) os << "  " << js[j].name << " -> " << id << " [style=dotted, arrowhead=none];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace nimrep
