#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nimrep/nimrep_engine.hpp"

namespace nimrep {

using CanonicalKey = std::vector<std::uint8_t>;

inline constexpr std::size_t kMaxCanonicalRank = 6;

/// Serialization: rank byte, then every entry of A_s then A_t row-major as a
/// length byte followed by big-endian magnitude bytes.
CanonicalKey serialize(const MatrixPair& pair);

/// Lexicographic minimum of serialize() over all simultaneous index
/// permutations and the s↔t swap. Rank above 6 is rejected.
CanonicalKey canonical_key(const MatrixPair& pair);

/// The pair attaining canonical_key().
MatrixPair canonical_form(const MatrixPair& pair);

/// True when b is a simultaneous index permutation of a (no s↔t swap).
bool permutation_equivalent(const MatrixPair& a, const MatrixPair& b);

std::string to_hex(const CanonicalKey& key);

}  // namespace nimrep
