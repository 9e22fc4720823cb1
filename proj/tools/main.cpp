// Command-line front end for the GF(2) sequence space library. One
// subcommand per library operation, plain deterministic text output.
//
// Exit status: 0 on success or verified property, 1 on property failure or
// an unresolved verdict, 2 on input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gf2seq/analysis.hpp"
#include "gf2seq/metric.hpp"
#include "gf2seq/operator.hpp"
#include "gf2seq/vector.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw gf2seq::ParseError("cannot open file \"" + path + "\"");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

// Builtin name, path to an operator file, or inline operator text.
gf2seq::Operator load_operator(const std::string& source) {
  if (source == "identity" || source == "shift_left" || source == "shift_right")
    return gf2seq::Operator::parse(source);
  if (std::ifstream file(source); file) {
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return gf2seq::Operator::parse(buffer.str());
  }
  return gf2seq::Operator::parse(source);
}

std::vector<gf2seq::FinSupportVec> load_vector_lines(const std::string& text) {
  std::vector<gf2seq::FinSupportVec> out;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const std::size_t e = line.find_last_not_of(" \t\r");
    try {
      out.push_back(gf2seq::FinSupportVec::parse(line.substr(b, e - b + 1)));
    } catch (const gf2seq::ParseError& err) {
      throw gf2seq::ParseError("line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finitely supported GF(2) sequence space: norms, operators, verification scans"};
  app.require_subcommand(1);

  int exit_code = kExitOk;

  // norm
  std::string norm_vec;
  auto* norm_cmd = app.add_subcommand("norm", "discrete norm of a vector literal");
  norm_cmd->add_option("vector", norm_vec, "vector literal, e.g. \"{1,3,7}\"")->required();
  norm_cmd->callback([&] {
    std::cout << gf2seq::norm(gf2seq::FinSupportVec::parse(norm_vec)) << "\n";
  });

  // add
  std::string add_lhs, add_rhs;
  auto* add_cmd = app.add_subcommand("add", "entry-wise GF(2) sum of two vectors");
  add_cmd->add_option("x", add_lhs, "vector literal")->required();
  add_cmd->add_option("y", add_rhs, "vector literal")->required();
  add_cmd->callback([&] {
    std::cout << (gf2seq::FinSupportVec::parse(add_lhs) + gf2seq::FinSupportVec::parse(add_rhs))
                     .to_string()
              << "\n";
  });

  // smul
  std::string smul_scalar, smul_vec;
  auto* smul_cmd = app.add_subcommand("smul", "scalar multiple of a vector");
  smul_cmd->add_option("scalar", smul_scalar, "0 or 1")->required();
  smul_cmd->add_option("vector", smul_vec, "vector literal")->required();
  smul_cmd->callback([&] {
    std::cout << (gf2seq::GF2Scalar::parse(smul_scalar) * gf2seq::FinSupportVec::parse(smul_vec))
                     .to_string()
              << "\n";
  });

  // apply
  std::string apply_op, apply_vec;
  auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a vector");
  apply_cmd->add_option("operator", apply_op, "built-in name, operator file, or inline text")
      ->required();
  apply_cmd->add_option("vector", apply_vec, "vector literal")->required();
  apply_cmd->callback([&] {
    std::cout << load_operator(apply_op).apply(gf2seq::FinSupportVec::parse(apply_vec)).to_string()
              << "\n";
  });

  // opnorm
  std::string opnorm_op;
  std::uint64_t opnorm_bound = gf2seq::kDefaultSearchBound;
  auto* opnorm_cmd = app.add_subcommand("opnorm", "operator norm with attainment witness");
  opnorm_cmd->add_option("operator", opnorm_op, "built-in name, operator file, or inline text")
      ->required();
  opnorm_cmd->add_option("-b,--bound", opnorm_bound, "basis indices scanned for rule operators");
  opnorm_cmd->callback([&] {
    const gf2seq::OperatorNormResult r =
        gf2seq::operator_norm(load_operator(opnorm_op), opnorm_bound);
    if (r.norm == 0 && !r.exact) {
      std::cout << "unresolved at bound " << opnorm_bound << "\n";
      exit_code = kExitPropertyFailure;
      return;
    }
    std::cout << r.norm;
    if (r.witness.has_value()) std::cout << " witness=" << r.witness->to_string();
    std::cout << (r.exact ? " exact" : " inexact") << "\n";
  });

  // witness
  std::string witness_op;
  std::uint64_t witness_bound = gf2seq::kDefaultSearchBound;
  auto* witness_cmd = app.add_subcommand("witness", "unit vector attaining the operator norm");
  witness_cmd->add_option("operator", witness_op, "built-in name, operator file, or inline text")
      ->required();
  witness_cmd->add_option("-b,--bound", witness_bound, "basis indices scanned for rule operators");
  witness_cmd->callback([&] {
    std::cout << gf2seq::attainment_witness(load_operator(witness_op), witness_bound).to_string()
              << "\n";
  });

  // cauchy
  std::string cauchy_file = "-";
  double cauchy_eps = 0.5;
  auto* cauchy_cmd = app.add_subcommand(
      "cauchy", "analyze a vector sequence (one literal per line, final line \"repeat\")");
  cauchy_cmd->add_option("file", cauchy_file, "sequence file, - for stdin");
  cauchy_cmd->add_option("--eps", cauchy_eps, "threshold in (0,1]; the verdict is the same for all");
  cauchy_cmd->callback([&] {
    const gf2seq::CauchyVerdict v =
        gf2seq::analyze_cauchy(gf2seq::VecSequence::parse(read_input(cauchy_file)), cauchy_eps);
    if (v.is_cauchy) {
      std::cout << "is_cauchy=true settle_index=" << *v.settle_index
                << " limit=" << v.limit->to_string() << "\n";
    } else {
      std::cout << "is_cauchy=false\n";
      exit_code = kExitPropertyFailure;
    }
  });

  // axioms
  unsigned axioms_p = 6;
  std::uint64_t axioms_seed = gf2seq::ScanOptions{}.seed;
  std::string axioms_fault;
  auto* axioms_cmd = app.add_subcommand("axioms", "vector-space and norm axiom scans");
  axioms_cmd->add_option("-p,--truncation", axioms_p, "scan vectors with support within {1..p}");
  axioms_cmd->add_option("--seed", axioms_seed, "seed for sampled stages");
  axioms_cmd->add_option("--inject-fault", axioms_fault, "corrupt an operation (harness self-check)")
      ->check(CLI::IsMember({"add"}));
  axioms_cmd->callback([&] {
    gf2seq::ScanOptions options;
    options.seed = axioms_seed;
    if (axioms_fault == "add")
      options.hooks.add = [](const gf2seq::FinSupportVec& x, const gf2seq::FinSupportVec& y) {
        return x + y + gf2seq::FinSupportVec::basis(1);
      };
    const gf2seq::AxiomReport vs = gf2seq::verify_vector_space_axioms(axioms_p, options);
    const gf2seq::AxiomReport nm = gf2seq::verify_norm_axioms(axioms_p, options);
    std::cout << "vector-space axioms\n"
              << gf2seq::format_report(vs) << "norm axioms\n"
              << gf2seq::format_report(nm);
    if (!vs.all_passed() || !nm.all_passed()) exit_code = kExitPropertyFailure;
  });

  // parallelogram
  unsigned para_p = 4;
  auto* para_cmd =
      app.add_subcommand("parallelogram", "classify the parallelogram identity over all pairs");
  para_cmd->add_option("-p,--truncation", para_p, "scan vectors with support within {1..p}");
  para_cmd->callback([&] {
    const gf2seq::ParallelogramSummary s = gf2seq::parallelogram_classify(para_p);
    std::cout << gf2seq::format_summary(s);
    if (!s.matches_zero_member_law()) exit_code = kExitPropertyFailure;
  });

  // enum
  unsigned enum_m = 0, enum_p = 0;
  auto* enum_cmd =
      app.add_subcommand("enum", "vectors with exactly m ones within the first p positions");
  enum_cmd->add_option("m", enum_m, "number of ones")->required();
  enum_cmd->add_option("p", enum_p, "position bound")->required();
  enum_cmd->callback([&] {
    for (const gf2seq::FinSupportVec& v : gf2seq::enumerate_fixed_weight(enum_m, enum_p))
      std::cout << v.to_string() << "\n";
  });

  // count
  unsigned count_p = 0, count_m = 0;
  auto* count_cmd = app.add_subcommand("count", "binomial(p, m), the size of that vector class");
  count_cmd->add_option("p", count_p, "position bound")->required();
  count_cmd->add_option("m", count_m, "number of ones")->required();
  count_cmd->callback([&] { std::cout << gf2seq::binomial(count_p, count_m) << "\n"; });

  // rank
  std::string rank_vec;
  unsigned rank_width = gf2seq::kDefaultRankWidth;
  auto* rank_cmd = app.add_subcommand("rank", "position of a vector in the counting bijection");
  rank_cmd->add_option("vector", rank_vec, "vector literal")->required();
  rank_cmd->add_option("-w,--width", rank_width, "admissible support width");
  rank_cmd->callback([&] {
    std::cout << gf2seq::rank(gf2seq::FinSupportVec::parse(rank_vec), rank_width) << "\n";
  });

  // unrank
  std::uint64_t unrank_n = 0;
  auto* unrank_cmd = app.add_subcommand("unrank", "vector at a position of the counting bijection");
  unrank_cmd->add_option("n", unrank_n, "non-negative integer")->required();
  unrank_cmd->callback([&] { std::cout << gf2seq::unrank(unrank_n).to_string() << "\n"; });

  // dense
  std::string dense_file = "-";
  unsigned dense_p = 0;
  auto* dense_cmd = app.add_subcommand(
      "dense", "check a subset (one literal per line) for density in the truncation");
  dense_cmd->add_option("file", dense_file, "subset file, - for stdin");
  dense_cmd->add_option("-p,--truncation", dense_p, "truncation")->required();
  dense_cmd->callback([&] {
    const bool dense =
        gf2seq::dense_subset_check(load_vector_lines(read_input(dense_file)), dense_p);
    std::cout << (dense ? "true" : "false") << "\n";
    if (!dense) exit_code = kExitPropertyFailure;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  } catch (const gf2seq::UnresolvedAtBoundError& e) {
    std::cout << e.what() << "\n";
    return kExitPropertyFailure;
  } catch (const gf2seq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return exit_code;
}
