#include "nimrep/knowledge.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "nimrep/errors.hpp"
#include "nimrep/json_io.hpp"

namespace nimrep {

std::string KnowledgeEntry::pattern() const {
  return "n ≡ " + std::to_string(n_residue) + " mod " + std::to_string(n_modulus);
}

KnowledgeTable KnowledgeTable::parse(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("knowledge table: ") + e.what(), e.byte);
  }
  KnowledgeTable table;
  try {
    table.version_ = doc.at("version").get<int>();
    for (const auto& e : doc.at("entries")) {
      KnowledgeEntry entry;
      entry.id = e.at("id").get<std::string>();
      entry.n_modulus = e.value("n_modulus", 1);
      entry.n_residue = e.value("n_residue", 0);
      entry.theta_s = matrix_from_json(e.at("theta_s"));
      entry.theta_t = matrix_from_json(e.at("theta_t"));
      entry.rank = e.value("rank", entry.theta_s.rows());
      entry.status = e.at("status").get<std::string>();
      entry.citation = e.at("citation").get<std::string>();
      entry.note = e.value("note", "");
      if (entry.n_modulus < 1) throw ParseError("knowledge entry " + entry.id + ": n_modulus must be positive");
      if (entry.rank != entry.theta_s.rows()) throw ParseError("knowledge entry " + entry.id + ": rank mismatch");
      table.entries_.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("knowledge table: ") + e.what());
  }
  return table;
}

KnowledgeTable KnowledgeTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read knowledge table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

KnowledgeTable KnowledgeTable::load_default(const std::optional<std::filesystem::path>& explicit_path) {
  if (explicit_path) return load(*explicit_path);
  if (const char* env = std::getenv("NIMREP_KNOWLEDGE"); env && *env) return load(env);
  std::vector<std::filesystem::path> candidates;
  std::error_code ec;
  if (const auto exe = std::filesystem::read_symlink("/proc/self/exe", ec); !ec)
    candidates.push_back(exe.parent_path().parent_path() / "share" / "nimrep" / "knowledge.json");
  candidates.emplace_back(NIMREP_KNOWLEDGE_SOURCE_PATH);
  candidates.emplace_back(NIMREP_KNOWLEDGE_INSTALL_PATH);
  for (const auto& candidate : candidates)
    if (std::filesystem::exists(candidate, ec)) return load(candidate);
  throw PreconditionError("no knowledge table found; pass --knowledge or set NIMREP_KNOWLEDGE");
}

const KnowledgeEntry* KnowledgeTable::match(const MatrixPair& pair, const CanonicalKey& key) const {
  for (const auto& e : entries_) {
    if (!e.applies_to(pair.n) || e.rank != pair.rank()) continue;
    if (canonical_key(MatrixPair(pair.n, e.theta_s, e.theta_t)) == key) return &e;
  }
  return nullptr;
}

}  // namespace nimrep
