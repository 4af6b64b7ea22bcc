#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "nimrep/canonical.hpp"
#include "nimrep/cells.hpp"
#include "nimrep/classifier.hpp"
#include "nimrep/dn_reps.hpp"
#include "nimrep/errors.hpp"
#include "nimrep/json_io.hpp"
#include "nimrep/knowledge.hpp"
#include "nimrep/verify.hpp"

using namespace nimrep;

namespace {

enum Exit { OK = 0, CHECK_FAILED = 1, USAGE = 2, RESOURCE_GUARD = 3 };

unsigned default_jobs() {
  if (const char* env = std::getenv("NIMREP_JOBS"); env && *env) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return static_cast<unsigned>(j);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid NIMREP_JOBS=" << env << "\n";
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw PreconditionError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string canonical_cell_name(const std::string& name) {
  for (const char* known : {"Le", "Ls", "Lt", "Lw0"})
    if (name == known || name == std::string("L_") + (known + 1)) return std::string("L_") + (known + 1);
  throw PreconditionError("unknown cell \"" + name + "\" (expected Le, Ls, Lt or Lw0)");
}

FilterSelection selection_without(const std::vector<std::string>& disabled) {
  FilterSelection sel;
  for (const auto& f : disabled) sel.set(parse_filter_id(f), false);
  return sel;
}

std::optional<std::filesystem::path> optional_path(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::filesystem::path(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonnegative integer matrix representations of the dihedral KL ring"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "nimrep 0.3.0");

  int n = 0;
  std::string format = "text";
  std::string output;
  auto add_common = [&](CLI::App* cmd, std::vector<std::string> formats) {
    cmd->add_option("--n", n, "dihedral parameter (n >= 3)")->required();
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
    cmd->add_option("--output,-o", output, "write to a file instead of stdout");
  };

  auto* cells = app.add_subcommand("cells", "left, right and two-sided cells");
  add_common(cells, {"text", "json", "dot"});

  std::string cell_name;
  bool all_matrices = false;
  auto* cellrep = app.add_subcommand("cellrep", "decategorified cell module and its decomposition");
  add_common(cellrep, {"text", "json"});
  cellrep->add_option("--cell", cell_name, "Le, Ls, Lt or Lw0")->required();
  cellrep->add_flag("--all", all_matrices, "print A_w for every w");

  std::vector<int> ranks{1, 2, 3};
  int entry_bound = 4;
  std::vector<std::string> disabled;
  unsigned jobs = default_jobs();
  std::string knowledge_path;
  std::uint64_t max_states = ClassifierConfig{}.max_states;
  auto* classify = app.add_subcommand("classify", "bounded search for admissible matrix pairs");
  add_common(classify, {"text", "json"});
  classify->add_option("--ranks", ranks, "ranks to search")->delimiter(',');
  classify->add_option("--entry-bound,-E", entry_bound, "largest entry of the free blocks")->check(CLI::PositiveNumber);
  classify->add_option("--no-filter", disabled, "disable a filter (F1..F7), repeatable")->delimiter(',');
  classify->add_option("--jobs,-j", jobs, "worker threads (default $NIMREP_JOBS)")->check(CLI::PositiveNumber);
  classify->add_option("--knowledge", knowledge_path, "knowledge table JSON");
  classify->add_option("--max-states", max_states, "resource guard on explored pairs");

  std::string suite = "paper";
  std::string annihilator_override;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--suite", suite, "paper, quick or full")->check(CLI::IsMember({"paper", "quick", "full"}));
  verify->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--knowledge", knowledge_path, "knowledge table JSON");
  verify->add_option("--expect-annihilator", annihilator_override, "override the expected n=4 J2 annihilator");
  verify->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string pair_file;
  auto* decompose_cmd = app.add_subcommand("decompose", "decompose a matrix pair into simple D_n-modules");
  add_common(decompose_cmd, {"text", "json"});
  decompose_cmd->add_option("file", pair_file, "MatrixPair JSON ('-' for stdin)")->required();

  auto* check = app.add_subcommand("check", "evaluate every filter on a matrix pair");
  add_common(check, {"text", "json"});
  check->add_option("file", pair_file, "MatrixPair JSON ('-' for stdin)")->required();
  check->add_option("--no-filter", disabled, "disable a filter (F1..F7)")->delimiter(',');
  check->add_option("--knowledge", knowledge_path, "knowledge table JSON");

  std::string u_text, w_text;
  auto* klmult = app.add_subcommand("klmult", "product of two KL basis elements");
  add_common(klmult, {"text", "json"});
  klmult->add_option("u", u_text, "reduced word, e or w0")->required();
  klmult->add_option("w", w_text, "reduced word, e or w0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? OK : USAGE;
  }

  try {
    if (*cells) {
      const KLAlgebra alg(n);
      const CellPartition p = compute_cells(StructureConstantTable(alg));
      Output out(output);
      if (format == "json")
        out.stream() << to_json(p).dump(2) << "\n";
      else if (format == "dot")
        out.stream() << cell_diagram_dot(p);
      else
        out.stream() << render_text(p);
      return OK;
    }
    if (*cellrep) {
      const KLAlgebra alg(n);
      const StructureConstantTable table(alg);
      const CellPartition p = compute_cells(table);
      const CellModule m = cell_module(table, p, p.left_cell_index(canonical_cell_name(cell_name)));
      const Decomposition d = decompose(n, m.theta_s(), m.theta_t());
      Output out(output);
      if (format == "json")
        out.stream() << Json{{"module", to_json(m, all_matrices)}, {"decomposition", to_json(d)}}.dump(2) << "\n";
      else
        out.stream() << render_text(m, all_matrices) << "decomposition: " << d.to_string() << "\n";
      return OK;
    }
    if (*classify) {
      const auto start = std::chrono::steady_clock::now();
      Classifier c(n, KnowledgeTable::load_default(optional_path(knowledge_path)));
      ClassifierConfig config{ranks, entry_bound, selection_without(disabled), jobs, max_states};
      const ClassificationReport rep = c.report(config);
      Output out(output);
      if (format == "json")
        out.stream() << to_json(rep, c.partition()).dump(2) << "\n";
      else
        out.stream() << render_text(rep, c.partition());
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::cerr << "classify n=" << n << " finished in " << secs << " s with " << jobs << " worker(s)\n";
      if (rep.guard_tripped()) {
        std::cerr << "resource guard tripped after " << max_states << " states; report is partial\n";
        return RESOURCE_GUARD;
      }
      return OK;
    }
    if (*verify) {
      VerifyOptions opts;
      opts.suite = suite;
      opts.jobs = jobs;
      opts.knowledge = KnowledgeTable::load_default(optional_path(knowledge_path));
      if (!annihilator_override.empty()) opts.expected_annihilator = IntPolynomial::parse(annihilator_override);
      const auto results = run_verify(opts);
      bool ok = true;
      if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : results) arr.push_back({{"id", r.id}, {"passed", r.passed}, {"detail", r.detail}});
        std::cout << Json{{"suite", suite}, {"checks", arr}}.dump(2) << "\n";
      }
      for (const auto& r : results) {
        ok = ok && r.passed;
        if (format == "text") std::cout << r.id << " " << (r.passed ? "PASS" : "FAIL") << "  " << r.detail << "\n";
        std::cerr << r.id << " took " << r.seconds << " s\n";
      }
      if (!ok) {
        std::cerr << "failed:";
        for (const auto& r : results)
          if (!r.passed) std::cerr << " " << r.id;
        std::cerr << "\n";
      }
      return ok ? OK : CHECK_FAILED;
    }
    if (*decompose_cmd) {
      const MatrixPair pair = parse_matrix_pair(read_input(pair_file), n);
      const Decomposition d = decompose(n, pair.theta_s, pair.theta_t);
      Output out(output);
      if (format == "json")
        out.stream() << to_json(d).dump() << "\n";
      else
        out.stream() << d.to_string() << "\n";
      return OK;
    }
    if (*check) {
      const MatrixPair pair = parse_matrix_pair(read_input(pair_file), n);
      Classifier c(n, KnowledgeTable::load_default(optional_path(knowledge_path)));
      const Candidate cand = c.assess(pair, selection_without(disabled));
      Output out(output);
      if (format == "json")
        out.stream() << to_json(cand, c.partition()).dump(2) << "\n";
      else
        out.stream() << render_text(cand, c.partition());
      return cand.tag == Tag::REJECTED ? CHECK_FAILED : OK;
    }
    if (*klmult) {
      const KLAlgebra alg(n);
      const GroupAlgebraElement product = alg.kl_multiply(alg.group().parse(u_text), alg.group().parse(w_text));
      Output out(output);
      if (format == "json")
        out.stream() << to_json(product).dump() << "\n";
      else
        out.stream() << product.to_string() << "\n";
      return OK;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (e.position() != std::string::npos) std::cerr << " at position " << e.position();
    std::cerr << ": " << e.what() << "\n";
    return USAGE;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return USAGE;
  } catch (const NotAModuleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return CHECK_FAILED;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return CHECK_FAILED;
  }
  return USAGE;
}
