#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 data error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stgf/bc_enum.hpp"
#include "stgf/bipoly.hpp"
#include "stgf/experiments.hpp"
#include "stgf/oracle.hpp"
#include "stgf/subtree_enum.hpp"
#include "stgf/tree.hpp"

namespace stgf::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kData = 2;

struct CountOptions {
  int k = 0;
  std::string contains;
  bool genfun = false;
  bool json = false;
  bool exact_degree = false;
  std::string family = "subtree";
  std::string file;
};

namespace detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split_anchors(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    if (part.empty()) throw UsageError("--contains expects L or L1,L2");
    out.push_back(part);
  }
  if (text.back() == ',' || out.empty() || out.size() > 2) throw UsageError("--contains expects L or L1,L2");
  return out;
}

inline std::string read_input(const std::string& file, std::istream& in) {
  if (!file.empty()) {
    std::ifstream f(file, std::ios::binary);
    if (!f) throw UsageError("cannot read '" + file + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void add_count_options(CLI::App* sub, CountOptions& o, bool with_family) {
  sub->add_option("--k", o.k, "maximum degree bound")->required();
  sub->add_option("--contains", o.contains, "anchor vertex L or pair L1,L2");
  sub->add_flag("--genfun", o.genfun, "print the generating function instead of the count");
  sub->add_flag("--json", o.json, "JSON output");
  sub->add_flag("--exact-degree", o.exact_degree, "maximum degree exactly k instead of at most k");
  if (with_family) {
    sub->add_option("--family", o.family, "subtree or bc")->check(CLI::IsMember({"subtree", "bc"}));
  }
  sub->add_option("file", o.file, "edge-list file (standard input when omitted)");
}

inline BiPoly oracle_exact(const Tree& t, int k, oracle::Family fam, const std::vector<std::string>& anchors) {
  const int min_k = fam == oracle::Family::subtree ? 1 : 3;
  if (k < min_k) throw KTooSmall(k, min_k);
  return subtract_nonneg(oracle::oracle_count(t, k, fam, anchors), oracle::oracle_count(t, k - 1, fam, anchors));
}

inline void print_result(const BiPoly& p, const CountOptions& o, std::ostream& out) {
  if (o.json) {
    out << (o.genfun ? to_json(p) : nlohmann::json{{"count", eval_counts(p).str()}}).dump() << "\n";
  } else if (o.genfun) {
    out << to_string(p) << "\n";
  } else {
    out << eval_counts(p).str() << "\n";
  }
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-bounded subtree and BC-subtree generating functions of trees", "stgf"};
  app.require_subcommand(1);

  CountOptions subtrees_opt, bc_opt, oracle_opt;
  auto* subtrees = app.add_subcommand("subtrees", "subtrees of maximum degree <= k");
  detail::add_count_options(subtrees, subtrees_opt, false);
  auto* bc = app.add_subcommand("bc", "BC-subtrees of maximum degree <= k (k >= 2)");
  detail::add_count_options(bc, bc_opt, false);
  auto* orc = app.add_subcommand("oracle", "brute-force reference count (at most 14 vertices)");
  detail::add_count_options(orc, oracle_opt, true);

  std::size_t rt_n = 0;
  std::uint64_t rt_seed = 0;
  auto* rt = app.add_subcommand("random-tree", "uniform random labeled tree as an edge list");
  rt->add_option("--n", rt_n, "vertex count")->required()->check(CLI::PositiveNumber);
  rt->add_option("--seed", rt_seed, "64-bit seed")->required();

  int ratio_n = 0, ratio_samples = 100, ratio_kmax = 8;
  std::uint64_t ratio_seed = 1;
  std::string ratio_family = "subtree", ratio_out;
  auto* ratio = app.add_subcommand("ratio", "density of degree-bounded structures over random trees");
  ratio->add_option("--n", ratio_n, "vertex count")->required();
  ratio->add_option("--samples", ratio_samples, "number of random trees")->capture_default_str();
  ratio->add_option("--kmax", ratio_kmax, "largest degree bound")->capture_default_str();
  ratio->add_option("--seed", ratio_seed, "64-bit seed")->capture_default_str();
  ratio->add_option("--family", ratio_family, "subtree or bc")
      ->check(CLI::IsMember({"subtree", "bc"}))
      ->capture_default_str();
  ratio->add_option("--out", ratio_out, "CSV path; means go to <stem>_mean<ext>")->required();

  std::vector<std::string> argv_store{"stgf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    auto count_command = [&](const CountOptions& o, auto&& compute) {
      const auto anchors = detail::split_anchors(o.contains);
      const Tree t = parse_edge_list(detail::read_input(o.file, in));
      detail::print_result(compute(t, o.k, anchors), o, out);
      return kOk;
    };
    if (subtrees->parsed()) {
      return count_command(subtrees_opt, [&](const Tree& t, int k, const auto& anchors) {
        return subtrees_opt.exact_degree ? count_exact_degree(t, k, anchors) : count_subtrees(t, k, anchors);
      });
    }
    if (bc->parsed()) {
      return count_command(bc_opt, [&](const Tree& t, int k, const auto& anchors) {
        return bc_opt.exact_degree ? count_bc_exact_degree(t, k, anchors) : count_bc(t, k, anchors);
      });
    }
    if (orc->parsed()) {
      const auto fam = oracle_opt.family == "bc" ? oracle::Family::bc : oracle::Family::subtree;
      return count_command(oracle_opt, [&](const Tree& t, int k, const auto& anchors) {
        return oracle_opt.exact_degree ? detail::oracle_exact(t, k, fam, anchors)
                                       : oracle::oracle_count(t, k, fam, anchors);
      });
    }
    if (rt->parsed()) {
      out << render_edge_list(random_tree(rt_n, rt_seed));
      return kOk;
    }
    if (ratio->parsed()) {
      const auto fam = ratio_family == "bc" ? experiments::Family::bc : experiments::Family::subtree;
      const auto records = experiments::ratio_sweep(ratio_n, ratio_samples, ratio_kmax, ratio_seed, fam);
      experiments::emit_csv(records, ratio_out);
      out << "wrote " << records.size() << " records to " << ratio_out << " and "
          << experiments::companion_path(ratio_out).string() << "\n";
      return kOk;
    }
  } catch (const detail::UsageError& e) {
    err << "stgf: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "stgf: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "stgf: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}

}  // namespace stgf::cli
