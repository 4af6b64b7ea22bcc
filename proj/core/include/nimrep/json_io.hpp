#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nimrep/cells.hpp"
#include "nimrep/classifier.hpp"
#include "nimrep/dn_reps.hpp"
#include "nimrep/group_algebra.hpp"
#include "nimrep/int_matrix.hpp"
#include "nimrep/nimrep_engine.hpp"
#include "nimrep/perron.hpp"

namespace nimrep {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json to_json(const BigInt& x);
BigInt bigint_from_json(const nlohmann::json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

/// {"n":4,"basis":"KL","coeffs":{"st":1,"e":1}}
Json to_json(const GroupAlgebraElement& x);
GroupAlgebraElement algebra_element_from_json(const nlohmann::json& j);

Json to_json(const CellPartition& p);
/// {"n":4,"cell":["s","sts","ts"],"name":"L_s","matrices":{"e":…,"s":…,…}}
Json to_json(const CellModule& m, bool all_matrices = true);

/// {"n":4,"rank":3,"theta_s":[[…]],"theta_t":[[…]]}
Json to_json(const MatrixPair& pair);
MatrixPair matrix_pair_from_json(const nlohmann::json& j);
/// Parses MatrixPair JSON text; syntax errors carry the byte offset. When
/// `n_override` is positive it replaces (or supplies) the "n" field.
MatrixPair parse_matrix_pair(const std::string& text, int n_override = 0);

Json to_json(const FilterReport& r);
/// {"V(4,1)":1,"V(1,-1)":1}
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(int n, const nlohmann::json& j);
Json to_json(const PerronAnalysis& p);
Json to_json(const Candidate& c, const CellPartition& partition);
Json to_json(const RankSection& s, const CellPartition& partition);
Json to_json(const ClassificationReport& r, const CellPartition& partition);

/// Columns padded to the widest cell (display width, not bytes).
std::string aligned_table(const std::vector<std::vector<std::string>>& rows);

std::string render_text(const CellPartition& p);
std::string render_text(const CellModule& m, bool all_matrices);
std::string render_text(const FilterReport& r);
std::string render_text(const Candidate& c, const CellPartition& partition);
std::string render_text(const ClassificationReport& r, const CellPartition& partition);

}  // namespace nimrep
