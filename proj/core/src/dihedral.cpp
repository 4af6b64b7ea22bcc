#include "nimrep/dihedral.hpp"

#include <algorithm>

#include "nimrep/errors.hpp"

namespace nimrep {

char to_char(Generator g) noexcept { return g == Generator::S ? 's' : 't'; }

namespace {

Generator as_generator(Leading l) { return l == Leading::S ? Generator::S : Generator::T; }
Leading as_leading(Generator g) { return g == Generator::S ? Leading::S : Leading::T; }

}  // namespace

std::size_t GroupElement::index() const noexcept {
  if (length_ == 0) return 0;
  if (length_ == n_) return 2 * static_cast<std::size_t>(n_) - 1;
  return 2 * static_cast<std::size_t>(length_) - 1 + (leading_ == Leading::T ? 1 : 0);
}

std::vector<Generator> GroupElement::reduced_word() const {
  std::vector<Generator> word;
  word.reserve(static_cast<std::size_t>(length_));
  if (length_ == 0) return word;
  Generator g = as_generator(leading_);
  for (int i = 0; i < length_; ++i) {
    word.push_back(g);
    g = other(g);
  }
  return word;
}

Generator GroupElement::first_letter() const {
  if (length_ == 0) throw PreconditionError("identity has no letters");
  return as_generator(leading_);
}

Generator GroupElement::last_letter() const {
  if (length_ == 0) throw PreconditionError("identity has no letters");
  Generator g = as_generator(leading_);
  return length_ % 2 == 1 ? g : other(g);
}

std::string GroupElement::to_string() const {
  if (length_ == 0) return "e";
  if (length_ == n_) return "w0";
  std::string out;
  for (Generator g : reduced_word()) out.push_back(to_char(g));
  return out;
}

DihedralGroup::DihedralGroup(int n) : n_(n) {
  if (n < 3) throw PreconditionError("dihedral group requires n >= 3, got " + std::to_string(n));
}

GroupElement DihedralGroup::generator(Generator g) const { return {n_, 1, as_leading(g)}; }

GroupElement DihedralGroup::alternating(int length, Generator first) const {
  if (length < 0 || length > n_)
    throw PreconditionError("alternating word length out of range: " + std::to_string(length));
  if (length == 0) return identity();
  if (length == n_) return longest_element();
  return {n_, length, as_leading(first)};
}

GroupElement DihedralGroup::element_at(std::size_t index) const {
  if (index >= order()) throw PreconditionError("element index out of range");
  if (index == 0) return identity();
  if (index == order() - 1) return longest_element();
  int length = static_cast<int>((index + 1) / 2);
  return {n_, length, index % 2 == 1 ? Leading::S : Leading::T};
}

std::vector<GroupElement> DihedralGroup::all_elements() const {
  std::vector<GroupElement> out;
  out.reserve(order());
  for (std::size_t i = 0; i < order(); ++i) out.push_back(element_at(i));
  return out;
}

void DihedralGroup::require_member(const GroupElement& a) const {
  if (a.n() != n_)
    throw PreconditionError("element of D_" + std::to_string(a.n()) + " used with D_" +
                            std::to_string(n_));
}

GroupElement DihedralGroup::multiply_right(const GroupElement& a, Generator g) const {
  require_member(a);
  const int len = a.length();
  if (len == 0) return generator(g);
  if (len == n_) {
    // w0 has a reduced word ending in g; dropping that letter leaves length n-1.
    Generator first = (n_ % 2 == 1) ? g : other(g);
    return alternating(n_ - 1, first);
  }
  if (a.last_letter() == g) return alternating(len - 1, a.first_letter());
  return alternating(len + 1, a.first_letter());
}

GroupElement DihedralGroup::multiply_left(Generator g, const GroupElement& a) const {
  require_member(a);
  const int len = a.length();
  if (len == 0) return generator(g);
  if (len == n_) return alternating(n_ - 1, other(g));
  if (a.first_letter() == g) return alternating(len - 1, other(g));
  return alternating(len + 1, g);
}

GroupElement DihedralGroup::element_from_word(std::span<const Generator> word) const {
  GroupElement x = identity();
  for (Generator g : word) x = multiply_right(x, g);
  return x;
}

GroupElement DihedralGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  require_member(a);
  require_member(b);
  GroupElement x = a;
  for (Generator g : b.reduced_word()) x = multiply_right(x, g);
  return x;
}

GroupElement DihedralGroup::inverse(const GroupElement& a) const {
  require_member(a);
  auto word = a.reduced_word();
  std::reverse(word.begin(), word.end());
  return element_from_word(word);
}

bool DihedralGroup::bruhat_lt(const GroupElement& a, const GroupElement& b) const {
  require_member(a);
  require_member(b);
  return a.length() < b.length();
}

GroupElement DihedralGroup::parse(std::string_view text) const {
  if (text == "e" || text == "1") return identity();
  if (text == "w0") return longest_element();
  if (text.empty()) throw ParseError("empty group element", 0);
  std::vector<Generator> word;
  word.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 's': word.push_back(Generator::S); break;
      case 't': word.push_back(Generator::T); break;
      default:
        throw ParseError("unexpected character '" + std::string(1, text[i]) +
                             "' in group element \"" + std::string(text) + "\"",
                         i);
    }
  }
  return element_from_word(word);
}

GroupElement swap_generators(const DihedralGroup& group, const GroupElement& a) {
  if (a.is_identity() || a.is_longest()) return a;
  return group.alternating(a.length(), other(a.first_letter()));
}

}  // namespace nimrep
