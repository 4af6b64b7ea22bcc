#include "nimrep/canonical.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <optional>

#include "nimrep/errors.hpp"

namespace nimrep {

namespace {

void append(CanonicalKey& out, const BigInt& x) {
  std::vector<std::uint8_t> bytes;
  export_bits(x, std::back_inserter(bytes), 8);
  if (x == 0) bytes.clear();
  if (bytes.size() > 255) throw PreconditionError("matrix entry too large to canonicalize");
  out.push_back(static_cast<std::uint8_t>(bytes.size()));
  out.insert(out.end(), bytes.begin(), bytes.end());
}

void append(CanonicalKey& out, const IntMatrix& m) {
  for (const auto& x : m.data()) append(out, x);
}

std::pair<CanonicalKey, MatrixPair> minimize(const MatrixPair& pair) {
  const std::size_t r = pair.rank();
  if (r > kMaxCanonicalRank)
    throw PreconditionError("canonicalization supports rank <= " + std::to_string(kMaxCanonicalRank) + " (got " +
                            std::to_string(r) + "); factorial search is infeasible beyond that");
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalKey best;
  std::optional<MatrixPair> best_pair;
  const MatrixPair swapped = pair.swapped();
  do {
    for (const MatrixPair* base : {&pair, &swapped}) {
      MatrixPair candidate = base->permuted(perm);
      CanonicalKey key = serialize(candidate);
      if (!best_pair || key < best) {
        best = std::move(key);
        best_pair = std::move(candidate);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {std::move(best), std::move(*best_pair)};
}

}  // namespace

CanonicalKey serialize(const MatrixPair& pair) {
  CanonicalKey out;
  out.push_back(static_cast<std::uint8_t>(pair.rank()));
  append(out, pair.theta_s);
  append(out, pair.theta_t);
  return out;
}

CanonicalKey canonical_key(const MatrixPair& pair) { return minimize(pair).first; }

MatrixPair canonical_form(const MatrixPair& pair) { return minimize(pair).second; }

bool permutation_equivalent(const MatrixPair& a, const MatrixPair& b) {
  if (a.n != b.n || a.rank() != b.rank()) return false;
  if (a.rank() > kMaxCanonicalRank) throw PreconditionError("permutation search is limited to rank 6");
  std::vector<std::size_t> perm(a.rank());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.permuted(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string to_hex(const CanonicalKey& key) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * key.size());
  for (std::uint8_t b : key) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

}  // namespace nimrep
