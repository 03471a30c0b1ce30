#pragma once

// Density of degree-bounded subtrees (or BC-subtrees) among all of them,
// measured over ensembles of uniform random labeled trees.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stgf/bc_enum.hpp"
#include "stgf/subtree_enum.hpp"
#include "stgf/tree.hpp"

namespace stgf::experiments {

using Rational = boost::multiprecision::cpp_rational;

enum class Family { subtree, bc };

/// eta_{<=k}(T) / eta(T) for one sample tree, kept exact.
struct RatioRecord {
  int n = 0;
  int k = 0;
  int sample_id = 0;
  Coeff numerator;
  Coeff denominator;

  Rational ratio() const { return Rational(numerator, denominator); }
};

struct MeanRecord {
  int n = 0;
  int k = 0;
  Rational mean;
};

/// Decimal rendering with exactly six fractional digits, rounded half up.
inline std::string render_fixed6(const Rational& r) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  const Coeff num = numerator(r);
  const Coeff den = denominator(r);
  const Coeff scaled = (num * 2000000 + den) / (den * 2);
  const Coeff whole = scaled / 1000000;
  std::string frac = Coeff(scaled % 1000000).str();
  frac.insert(0, 6 - frac.size(), '0');
  return whole.str() + "." + frac;
}

/// Seed of sample `i`: SplitMix64 finaliser applied to seed + (i+1)*golden.
inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t x = seed + (i + 1) * 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counts (y = z = 1) for one tree and degree bound.
inline Coeff count_for(const Tree& t, int k, Family family) {
  const BiPoly one = BiPoly::one();
  if (family == Family::subtree) return eval_counts(count_all(subtree_weights(t, k, one, one), k));
  return eval_counts(count_bc_all(bc_weights(t, k, one, one), k));
}

inline int first_k(Family family) { return family == Family::subtree ? 1 : 2; }

/// Ratio of the <= k count to the saturated (k = n-1) count for every
/// k in first_k..k_max and every sample tree.
inline std::vector<RatioRecord> ratio_sweep(int n, int samples, int k_max, std::uint64_t seed, Family family) {
  const int min_n = family == Family::subtree ? 2 : 3;
  if (n < min_n) throw InvalidArgument("n must be at least " + std::to_string(min_n));
  if (samples < 0) throw InvalidArgument("samples must be non-negative");
  if (k_max > n - 1 || k_max < first_k(family)) {
    throw InvalidArgument("kmax must lie in [" + std::to_string(first_k(family)) + ", n-1]");
  }
  std::vector<RatioRecord> out;
  for (int s = 0; s < samples; ++s) {
    const Tree t = random_tree(static_cast<std::size_t>(n), sample_seed(seed, static_cast<std::uint64_t>(s)));
    const Coeff total = count_for(t, n - 1, family);
    for (int k = first_k(family); k <= k_max; ++k) {
      out.push_back({n, k, s, count_for(t, k, family), total});
    }
  }
  std::sort(out.begin(), out.end(), [](const RatioRecord& a, const RatioRecord& b) {
    return std::tie(a.n, a.k, a.sample_id) < std::tie(b.n, b.k, b.sample_id);
  });
  return out;
}

/// Mean ratio per (n, k), ordered by (n, k).
inline std::vector<MeanRecord> aggregate(const std::vector<RatioRecord>& records) {
  std::map<std::pair<int, int>, std::pair<Rational, int>> acc;
  for (const auto& r : records) {
    auto& [sum, count] = acc[{r.n, r.k}];
    sum += r.ratio();
    ++count;
  }
  std::vector<MeanRecord> out;
  for (const auto& [key, value] : acc) out.push_back({key.first, key.second, value.first / value.second});
  return out;
}

inline std::string ratios_csv(std::vector<RatioRecord> records) {
  std::sort(records.begin(), records.end(), [](const RatioRecord& a, const RatioRecord& b) {
    return std::tie(a.n, a.k, a.sample_id) < std::tie(b.n, b.k, b.sample_id);
  });
  std::string out = "n,k,sample_id,ratio\n";
  for (const auto& r : records) {
    out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.sample_id) + "," +
           render_fixed6(r.ratio()) + "\n";
  }
  return out;
}

inline std::string means_csv(const std::vector<RatioRecord>& records) {
  std::string out = "n,k,mean_ratio\n";
  for (const auto& m : aggregate(records)) {
    out += std::to_string(m.n) + "," + std::to_string(m.k) + "," + render_fixed6(m.mean) + "\n";
  }
  return out;
}

/// `ratios.csv` -> `ratios_mean.csv`.
inline std::filesystem::path companion_path(const std::filesystem::path& path) {
  std::filesystem::path out = path;
  out.replace_filename(path.stem().string() + "_mean" + path.extension().string());
  return out;
}

/// Writes the per-sample CSV at `path` and the per-(n, k) means beside it.
inline void emit_csv(const std::vector<RatioRecord>& records, const std::filesystem::path& path) {
  auto write = [](const std::filesystem::path& p, const std::string& body) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error("cannot open '" + p.string() + "' for writing");
    out << body;
    if (!out) throw Error("write to '" + p.string() + "' failed");
  };
  write(path, ratios_csv(records));
  write(companion_path(path), means_csv(records));
}

}  // namespace stgf::experiments
