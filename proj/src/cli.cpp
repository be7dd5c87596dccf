#include "baxter/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "baxter/bipolar.hpp"
#include "baxter/coalescent.hpp"
#include "baxter/continuum.hpp"
#include "baxter/error.hpp"
#include "baxter/locallim.hpp"
#include "baxter/parallel.hpp"
#include "baxter/permutation.hpp"
#include "baxter/serialize.hpp"
#include "baxter/walk.hpp"
#include "baxter/walk_sampler.hpp"

namespace baxter::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output goes to --out when given, else to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<Json> read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_jsonl(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file " + path);
  return read_jsonl(in);
}

Permutation parse_pattern(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
  std::istringstream in(cleaned);
  std::vector<int> values;
  for (int v; in >> v;) values.push_back(v);
  if (!in.eof()) throw UsageError("bad pattern '" + text + "'");
  return Permutation(std::move(values));
}

std::vector<Permutation> brute_force_baxter(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  std::vector<Permutation> out;
  do {
    Permutation p(v);
    if (is_baxter(p)) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int cmd_sample(std::size_t n_min, std::size_t n_max, std::size_t count, std::uint64_t seed,
               const std::string& method, std::uint64_t max_attempts, std::ostream& out) {
  std::vector<QuadrantWalk> walks(count);
  if (method == "exact") {
    ExactExcursionSampler sampler(n_min, n_max);
    Rng rng(seed);
    walks = sampler.sample(count, rng);
  } else {
    parallel_for(count, [&](std::size_t i) {
      Rng rng = Rng::derived(seed, i);
      walks[i] = sample_uniform_excursion(n_min, n_max, rng, max_attempts);
    });
  }
  for (const auto& w : walks) out << to_json(to_permutation(build(w))).dump() << '\n';
  return kOk;
}

int cmd_convert(const std::string& from, const std::string& to, const std::string& in_path,
                std::ostream& out) {
  for (const Json& j : read_input(in_path)) {
    Json result;
    if (from == "map") {
      const BipolarOrientation m = map_from_json(j);
      validate_map(m);
      if (to == "walk") result = to_json(to_walk(m));
      else if (to == "map") result = to_json(canonical(m));
      else result = to_json(to_baxter(m));
    } else {
      const QuadrantWalk w = walk_from_json(j);
      if (to == "walk") result = to_json(w);
      else if (to == "map") result = to_json(from_walk(w));
      else if (from == "coalescent") result = to_json(to_permutation(build(w)));
      else result = to_json(to_baxter(from_walk(w)));
    }
    out << result.dump() << '\n';
  }
  return kOk;
}

int cmd_verify(std::size_t max_size, std::ostream& out) {
  bool ok = true;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto walks = enumerate_walks(n);
    const auto baxter = brute_force_baxter(n);
    std::size_t diagram = 0, round_trip = 0;
    std::set<Permutation> image;
    for (const auto& w : walks) {
      const BipolarOrientation m = from_walk(w);
      const Permutation via_map = to_baxter(m);
      const Permutation via_walk = to_permutation(build(w));
      if (via_map != via_walk) ++diagram;
      if (to_walk(m) != w || canonical(from_walk(to_walk(m))) != canonical(m)) ++round_trip;
      image.insert(via_walk);
    }
    const bool bijective = image.size() == walks.size() &&
                           std::equal(image.begin(), image.end(), baxter.begin(), baxter.end());
    ok = ok && diagram == 0 && round_trip == 0 && bijective;
    out << "size " << n << ": walks " << walks.size() << ", baxter " << baxter.size()
        << ", diagram mismatches " << diagram << ", round-trip failures " << round_trip
        << ", bijective " << (bijective ? "yes" : "no") << '\n';
  }
  out << (ok ? "diagram commutes" : "verification FAILED") << '\n';
  return ok ? kOk : kVerificationFailure;
}

int cmd_enumerate(const std::string& family, std::size_t size, std::ostream& out) {
  if (family == "walk") {
    for (const auto& w : enumerate_walks(size)) out << to_json(w).dump() << '\n';
  } else {
    if (size < 1 || size > 10) throw UsageError("baxter enumeration supports sizes 1..10");
    for (const auto& p : brute_force_baxter(size)) out << to_json(p).dump() << '\n';
  }
  return kOk;
}

int cmd_permuton(const std::string& in_path, std::size_t grid, std::ostream& out) {
  if (grid == 0) throw UsageError("--grid must be positive");
  const auto perms = read_input(in_path);
  if (perms.empty()) throw UsageError("no permutations in input");
  PermutonHistogram mean;
  mean.k = grid;
  mean.mass.assign(grid * grid, 0.0);
  for (const Json& j : perms) {
    const PermutonHistogram h = permuton_histogram(permutation_from_json(j), grid);
    for (std::size_t c = 0; c < h.mass.size(); ++c) mean.mass[c] += h.mass[c];
  }
  for (double& v : mean.mass) v /= static_cast<double>(perms.size());
  write_csv(out, mean);
  return kOk;
}

int cmd_density(const Permutation& pattern, const std::string& in_path, std::ostream& out) {
  const auto perms = read_input(in_path);
  if (perms.empty()) throw UsageError("no permutations in input");
  double sum = 0, sum_sq = 0;
  for (const Json& j : perms) {
    const double d = consecutive_pattern_density(permutation_from_json(j), pattern);
    sum += d;
    sum_sq += d * d;
  }
  const auto count = static_cast<double>(perms.size());
  const double mean = sum / count;
  const double var = perms.size() > 1 ? std::max(0.0, (sum_sq - count * mean * mean) / (count - 1)) : 0.0;
  std::string label;
  for (int v : pattern.values()) label += std::to_string(v);
  out << "pattern,density,stderr\n"
      << label << ',' << format_double(mean) << ',' << format_double(std::sqrt(var / count)) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Baxter permutations, quadrant walks, bipolar orientations and coalescent walks",
               "baxter_lab"};
  app.require_subcommand(1);
  std::string out_path;

  std::size_t n_min = 0, n_max = 0, count = 1;
  std::uint64_t seed = 0, max_attempts = kDefaultMaxAttempts;
  std::string method = "rejection";
  auto* sample = app.add_subcommand("sample-baxter", "Uniform Baxter permutations via walks");
  sample->add_option("--min", n_min, "Smallest accepted size")->required();
  sample->add_option("--max", n_max, "Largest accepted size")->required();
  sample->add_option("--count", count, "Number of permutations");
  sample->add_option("--seed", seed, "64-bit seed");
  sample->add_option("--method", method, "rejection or exact")
      ->check(CLI::IsMember({"rejection", "exact"}));
  sample->add_option("--max-attempts", max_attempts, "Rejection attempts per sample");
  sample->add_option("--out", out_path, "Output JSONL file");

  std::string from, to, in_path;
  auto* convert = app.add_subcommand("convert", "Convert between families");
  convert->add_option("--from", from)->required()->check(CLI::IsMember({"walk", "map", "coalescent"}));
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"walk", "map", "permutation"}));
  convert->add_option("--in", in_path, "Input JSONL file (default stdin)");
  convert->add_option("--out", out_path, "Output JSONL file");

  std::size_t max_size = 0;
  auto* verify = app.add_subcommand("verify-diagram", "Exhaustive check of the bijections");
  verify->add_option("--max-size", max_size)->required()->check(CLI::Range(1, 9));

  std::string family;
  std::size_t size = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List every object of a size");
  enumerate->add_option("--family", family)->required()->check(CLI::IsMember({"walk", "baxter"}));
  enumerate->add_option("--size", size)->required();
  enumerate->add_option("--out", out_path, "Output JSONL file");

  std::size_t grid = 0;
  auto* permuton = app.add_subcommand("permuton", "Mean permuton histogram as CSV");
  permuton->add_option("--in", in_path, "Permutations (JSONL)")->required();
  permuton->add_option("--grid", grid)->required();
  permuton->add_option("--out", out_path, "Output CSV file");

  std::size_t k = 0, n = 10000, samples = 2000, batch = 1000;
  double window = 0.1;
  std::string pattern_text;
  auto* estimate = app.add_subcommand("estimate-pattern", "Monte-Carlo pattern probability");
  estimate->add_option("--k", k, "Pattern size")->required();
  estimate->add_option("--pattern", pattern_text, "Pattern, e.g. 2,1")->required();
  estimate->add_option("--n", n, "Walk size");
  estimate->add_option("--samples", samples);
  estimate->add_option("--seed", seed);
  estimate->add_option("--window", window, "Relative size window");
  std::string estimate_method = "exact";
  estimate->add_option("--method", estimate_method, "exact or rejection")
      ->check(CLI::IsMember({"rejection", "exact"}));
  estimate->add_option("--batch", batch, "Samples per seeded batch");
  estimate->add_option("--out", out_path, "Output JSONL file");

  auto* density = app.add_subcommand("density", "Consecutive pattern density as CSV");
  density->add_option("--pattern", pattern_text)->required();
  density->add_option("--in", in_path, "Permutations (JSONL)")->required();
  density->add_option("--out", out_path, "Output CSV file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  try {
    Sink sink(out_path, out);
    if (*sample) return cmd_sample(n_min, n_max, count, seed, method, max_attempts, *sink);
    if (*convert) return cmd_convert(from, to, in_path, *sink);
    if (*verify) return cmd_verify(max_size, *sink);
    if (*enumerate) return cmd_enumerate(family, size, *sink);
    if (*permuton) return cmd_permuton(in_path, grid, *sink);
    if (*estimate) {
      const Permutation pattern = parse_pattern(pattern_text);
      if (pattern.size() != k) throw UsageError("--k does not match the pattern length");
      PatternEstimateOptions opts;
      opts.window = window;
      opts.batch_size = batch;
      opts.method = estimate_method == "exact" ? ExcursionMethod::Exact : ExcursionMethod::Rejection;
      *sink << to_json(estimate_pattern_probability(pattern, n, samples, seed, opts)).dump() << '\n';
      return kOk;
    }
    if (*density) return cmd_density(parse_pattern(pattern_text), in_path, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const SamplingFailure& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace baxter::cli
