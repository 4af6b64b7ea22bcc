#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nimrep {

enum class Generator : unsigned char { S, T };

constexpr Generator other(Generator g) noexcept {
  return g == Generator::S ? Generator::T : Generator::S;
}

char to_char(Generator g) noexcept;

/// First letter of the canonical reduced word. NONE only for the identity.
enum class Leading : unsigned char { NONE, S, T };

/// An element of D_n stored as (length, leading letter) of its reduced word.
/// The reduced word is the alternating word of that length starting with the
/// leading letter. The longest element always has leading S.
class GroupElement {
 public:
  GroupElement() = default;

  int n() const noexcept { return n_; }
  int length() const noexcept { return length_; }
  Leading leading() const noexcept { return leading_; }

  bool is_identity() const noexcept { return length_ == 0; }
  bool is_longest() const noexcept { return length_ == n_; }

  /// Position in the (length, leading) order: e=0, s=1, t=2, st=3, ..., w0=2n-1.
  std::size_t index() const noexcept;

  /// Letters of the canonical reduced word.
  std::vector<Generator> reduced_word() const;
  Generator first_letter() const;
  Generator last_letter() const;

  /// "e", "w0" or the reduced word such as "tst".
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.index() <=> b.index();
  }

 private:
  friend class DihedralGroup;
  GroupElement(int n, int length, Leading leading) : n_(n), length_(length), leading_(leading) {}

  int n_ = 0;
  int length_ = 0;
  Leading leading_ = Leading::NONE;
};

/// The dihedral group <s,t | s^2 = t^2 = (st)^n = e>, n >= 3.
class DihedralGroup {
 public:
  explicit DihedralGroup(int n);

  int n() const noexcept { return n_; }
  std::size_t order() const noexcept { return 2 * static_cast<std::size_t>(n_); }

  GroupElement identity() const { return {n_, 0, Leading::NONE}; }
  GroupElement generator(Generator g) const;
  GroupElement longest_element() const { return {n_, n_, Leading::S}; }

  /// Alternating element of the given length starting with `first`.
  GroupElement alternating(int length, Generator first) const;

  GroupElement element_at(std::size_t index) const;

  /// All 2n elements in (length, leading) order.
  std::vector<GroupElement> all_elements() const;

  GroupElement element_from_word(std::span<const Generator> word) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement multiply_right(const GroupElement& a, Generator g) const;
  GroupElement multiply_left(Generator g, const GroupElement& a) const;
  GroupElement inverse(const GroupElement& a) const;

  /// Bruhat order restricted to the dihedral length rule.
  bool bruhat_lt(const GroupElement& a, const GroupElement& b) const;

  /// Parses "e", "w0" or any word over {s,t}; the result is reduced.
  GroupElement parse(std::string_view text) const;

  bool contains(const GroupElement& a) const noexcept { return a.n() == n_; }

 private:
  void require_member(const GroupElement& a) const;

  int n_;
};

/// Swaps the letters s and t in the reduced word.
GroupElement swap_generators(const DihedralGroup& group, const GroupElement& a);

}  // namespace nimrep
