#include "nimrep/group_algebra.hpp"

#include <sstream>

#include "nimrep/errors.hpp"

namespace nimrep {

std::string to_string(Basis b) { return b == Basis::GROUP ? "GROUP" : "KL"; }

GroupAlgebraElement GroupAlgebraElement::basis_vector(const GroupElement& w, Basis basis, const BigInt& c) {
  GroupAlgebraElement x(w.n(), basis);
  x.add(w, c);
  return x;
}

BigInt GroupAlgebraElement::coefficient(const GroupElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void GroupAlgebraElement::add(const GroupElement& w, const BigInt& c) {
  if (w.n() != n_) throw PreconditionError("group element does not belong to D_" + std::to_string(n_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GroupAlgebraElement::require_compatible(const GroupAlgebraElement& other) const {
  if (other.n_ != n_ || other.basis_ != basis_)
    throw PreconditionError("group algebra elements with different n or basis");
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  require_compatible(other);
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  require_compatible(other);
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const BigInt& c = it->second;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag << "·";
    os << it->first.to_string();
  }
  return os.str();
}

KLAlgebra::KLAlgebra(int n) : group_(n) {
  const std::size_t order = group_.order();
  const auto elements = group_.all_elements();
  product_table_.resize(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      product_table_[a * order + b] = group_.multiply(elements[a], elements[b]).index();

  auto generator_matrix = [&](Generator x) {
    IntMatrix g(order, order);
    for (std::size_t j = 0; j < order; ++j) {
      const GroupAlgebraElement image = kl_left_multiply_generator(x, elements[j]);
      for (const auto& [v, c] : image.terms()) g(v.index(), j) = c;
    }
    return g;
  };
  left_actions_.resize(order);
  left_actions_[0] = IntMatrix::identity(order);
  const IntMatrix gs = generator_matrix(Generator::S);
  const IntMatrix gt = generator_matrix(Generator::T);
  for (const auto& u : elements) {
    if (u.is_identity()) continue;
    const Generator x = u.first_letter();
    const IntMatrix& gx = x == Generator::S ? gs : gt;
    const GroupElement rest = group_.multiply_left(x, u);
    if (rest.is_identity()) {
      left_actions_[u.index()] = gx;
    } else if (rest.length() == 1) {
      left_actions_[u.index()] = gx * left_actions_[rest.index()];
    } else {
      const GroupElement shorter = group_.multiply_left(other(x), rest);
      left_actions_[u.index()] = gx * left_actions_[rest.index()] - left_actions_[shorter.index()];
    }
  }
}

void KLAlgebra::require_basis(const GroupAlgebraElement& x, Basis b) const {
  if (x.n() != n()) throw PreconditionError("element of Z[D_" + std::to_string(x.n()) + "] used with n=" + std::to_string(n()));
  if (x.basis() != b) throw PreconditionError("expected an element in the " + to_string(b) + " basis");
}

GroupAlgebraElement KLAlgebra::kl_to_group(const GroupAlgebraElement& x) const {
  require_basis(x, Basis::KL);
  const std::size_t order = dimension();
  std::vector<BigInt> dense(order);
  for (const auto& [w, c] : x.terms()) {
    dense[w.index()] += c;
    // Every element strictly shorter than w precedes the first index of w's length.
    const std::size_t shorter = w.length() == 0 ? 0 : 2 * static_cast<std::size_t>(w.length()) - 1;
    for (std::size_t i = 0; i < shorter; ++i) dense[i] += c;
  }
  GroupAlgebraElement out(n(), Basis::GROUP);
  for (std::size_t i = 0; i < order; ++i) out.add(group_.element_at(i), dense[i]);
  return out;
}

GroupAlgebraElement KLAlgebra::group_to_kl(const GroupAlgebraElement& x) const {
  require_basis(x, Basis::GROUP);
  const std::size_t order = dimension();
  std::vector<BigInt> residual(order);
  for (const auto& [w, c] : x.terms()) residual[w.index()] = c;
  GroupAlgebraElement out(n(), Basis::KL);
  for (std::size_t i = order; i-- > 0;) {
    const BigInt c = residual[i];
    if (c == 0) continue;
    const GroupElement w = group_.element_at(i);
    out.add(w, c);
    residual[i] = 0;
    const std::size_t shorter = w.length() == 0 ? 0 : 2 * static_cast<std::size_t>(w.length()) - 1;
    for (std::size_t k = 0; k < shorter; ++k) residual[k] -= c;
  }
  return out;
}

GroupAlgebraElement KLAlgebra::convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const {
  require_basis(a, Basis::GROUP);
  require_basis(b, Basis::GROUP);
  const std::size_t order = dimension();
  std::vector<BigInt> dense(order);
  for (const auto& [u, cu] : a.terms())
    for (const auto& [w, cw] : b.terms()) dense[product_table_[u.index() * order + w.index()]] += cu * cw;
  GroupAlgebraElement out(n(), Basis::GROUP);
  for (std::size_t i = 0; i < order; ++i) out.add(group_.element_at(i), dense[i]);
  return out;
}

GroupAlgebraElement KLAlgebra::kl_left_multiply_generator(Generator x, const GroupElement& w) const {
  if (!group_.contains(w)) throw PreconditionError("element does not belong to D_" + std::to_string(n()));
  GroupAlgebraElement out(n(), Basis::KL);
  const GroupElement xw = group_.multiply_left(x, w);
  if (w.is_identity() || (w.length() == 1 && w.first_letter() == other(x))) {
    out.add(xw, 1);
  } else if (xw.length() > w.length()) {
    out.add(xw, 1);
    out.add(group_.multiply_left(other(x), w), 1);
  } else {
    out.add(w, 2);
  }
  return out;
}

GroupAlgebraElement KLAlgebra::inverse_transport(const GroupAlgebraElement& x) const {
  if (x.n() != n()) throw PreconditionError("element of the wrong group");
  GroupAlgebraElement out(n(), x.basis());
  for (const auto& [w, c] : x.terms()) out.add(group_.inverse(w), c);
  return out;
}

GroupAlgebraElement KLAlgebra::kl_right_multiply_generator(const GroupElement& w, Generator x) const {
  return inverse_transport(kl_left_multiply_generator(x, group_.inverse(w)));
}

GroupAlgebraElement KLAlgebra::column(const IntMatrix& m, std::size_t j) const {
  GroupAlgebraElement out(n(), Basis::KL);
  for (std::size_t i = 0; i < m.rows(); ++i) out.add(group_.element_at(i), m(i, j));
  return out;
}

const IntMatrix& KLAlgebra::left_action(const GroupElement& u) const {
  if (!group_.contains(u)) throw PreconditionError("element does not belong to D_" + std::to_string(n()));
  return left_actions_[u.index()];
}

GroupAlgebraElement KLAlgebra::kl_multiply_by_convolution(const GroupElement& u, const GroupElement& w) const {
  const auto ug = kl_to_group(GroupAlgebraElement::basis_vector(u, Basis::KL));
  const auto wg = kl_to_group(GroupAlgebraElement::basis_vector(w, Basis::KL));
  return group_to_kl(convolve(ug, wg));
}

GroupAlgebraElement KLAlgebra::kl_multiply_by_recursion(const GroupElement& u, const GroupElement& w) const {
  if (!group_.contains(w)) throw PreconditionError("element does not belong to D_" + std::to_string(n()));
  return column(left_action(u), w.index());
}

GroupAlgebraElement KLAlgebra::kl_multiply(const GroupElement& u, const GroupElement& w) const {
  auto by_recursion = kl_multiply_by_recursion(u, w);
  auto by_convolution = kl_multiply_by_convolution(u, w);
  if (by_recursion != by_convolution)
    throw InternalError("KL product " + u.to_string() + "*" + w.to_string() + " disagrees: recursion gives " +
                        by_recursion.to_string() + ", convolution gives " + by_convolution.to_string());
  return by_recursion;
}

GroupAlgebraElement KLAlgebra::kl_product(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const {
  require_basis(a, Basis::KL);
  require_basis(b, Basis::KL);
  GroupAlgebraElement out(n(), Basis::KL);
  for (const auto& [u, cu] : a.terms()) {
    const IntMatrix& m = left_action(u);
    for (const auto& [w, cw] : b.terms()) {
      const BigInt scale = cu * cw;
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (m(i, w.index()) != 0) out.add(group_.element_at(i), scale * m(i, w.index()));
    }
  }
  return out;
}

StructureConstantTable::StructureConstantTable(const KLAlgebra& algebra)
    : n_(algebra.n()), order_(algebra.dimension()) {
  const auto elements = algebra.group().all_elements();
  entries_.reserve(order_ * order_);
  for (const auto& u : elements) {
    for (const auto& w : elements) {
      auto p = algebra.kl_multiply_by_recursion(u, w);
      for (const auto& [v, c] : p.terms())
        if (c < 0)
          throw InternalError("negative structure constant at (" + u.to_string() + ", " + w.to_string() + ", " +
                              v.to_string() + ")");
      entries_.push_back(std::move(p));
    }
  }
}

const GroupAlgebraElement& StructureConstantTable::product(const GroupElement& u, const GroupElement& w) const {
  if (u.n() != n_ || w.n() != n_) throw PreconditionError("element of the wrong group");
  return entries_[u.index() * order_ + w.index()];
}

BigInt StructureConstantTable::constant(const GroupElement& u, const GroupElement& w, const GroupElement& v) const {
  return product(u, w).coefficient(v);
}

}  // namespace nimrep
