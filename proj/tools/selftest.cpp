#include <algorithm>
#include <sstream>

#include "app.hpp"
#include "checks.hpp"

namespace ratcurve::app {
namespace {

constexpr std::size_t kMaxMonomialGens = 8;
constexpr int kRandomMonomialMaxDegree = 40;

std::string exponents(const MonomialParam& m) {
  std::string s = "d=" + std::to_string(m.d) + " a=(";
  for (std::size_t i = 0; i < m.exponents.size(); ++i) s += (i ? "," : "") + std::to_string(m.exponents[i]);
  return s + ")";
}

std::string monomial_failure(const MonomialCheck& c) {
  std::ostringstream os;
  os << "monomial " << exponents(c.param) << ": ";
  if (!c.error.empty()) {
    os << c.error;
  } else {
    os << "r=" << c.r << " oracle=" << c.oracle_r << " phi_matches_oracle=" << c.phi_matches_oracle
       << " closure_iff=" << c.closure_iff;
  }
  return os.str();
}

std::string dense_failure(const std::vector<BinaryForm<PrimeField>>& gens, const DenseCheck& c) {
  std::ostringstream os;
  os << "dense " << describe(gens) << ": ";
  if (!c.error.empty()) {
    os << c.error;
    return os.str();
  }
  os << "r=" << c.r << " e=" << c.e << " j=" << c.j << " d=" << c.d << " failed:";
  const std::pair<const char*, bool> flags[] = {
      {"degree_identity", c.degree_identity},     {"divides_columns", c.divides_columns},
      {"j_is_d_squared", c.j_is_d_squared},       {"hb_valid", c.hb_valid},
      {"reparam_coprime", c.reparam_coprime},     {"reparam_degree", c.reparam_degree},
      {"reparam_extension", c.reparam_extension}, {"reparam_degree_one", c.reparam_degree_one},
      {"core_in_reductions", c.core_in_reductions}, {"core_iff", c.core_iff},
      {"prime_degree", c.prime_degree_ok},        {"consistent", c.consistent}};
  for (const auto& [name, v] : flags) {
    if (!v) os << " " << name;
  }
  return os.str();
}

}  // namespace

CommandResult cmd_selftest(const Options& opt) {
  Mutation mut;
  try {
    mut = parse_mutation(opt.mutate);
  } catch (const Error& e) {
    return {kInputError, "", std::string("error: ") + e.what()};
  }
  if (opt.d_max < 1 || opt.corpus_size < 0) {
    return {kInputError, "", "error: --d-max must be >= 1 and --corpus-size >= 0"};
  }
  const std::uint64_t seed = opt.seed.value_or(1);
  const PrimeField f(kDefaultPrime);

  std::vector<MonomialParam> mono;
  for (int d = 1; d <= opt.d_max; ++d) {
    auto batch = monomial_corpus_exhaustive(d, kMaxMonomialGens);
    mono.insert(mono.end(), batch.begin(), batch.end());
  }
  const std::size_t exhaustive = mono.size();
  Rng rng(seed);
  for (int i = 0; i < opt.corpus_size; ++i) {
    const int d = static_cast<int>(rng.between(1, kRandomMonomialMaxDegree));
    mono.push_back(random_monomial_param(rng, d, kMaxMonomialGens));
  }
  const auto dense = dense_corpus(f, rng, opt.corpus_size);

  const auto mono_results = parallel_map<MonomialCheck>(
      mono.size(), opt.threads, [&](std::size_t i) { return check_monomial(f, mono[i], seed + i, mut); });
  const auto dense_results = parallel_map<DenseCheck>(
      dense.size(), opt.threads, [&](std::size_t i) { return check_dense(f, dense[i], seed + i, mut); });

  std::size_t mono_pass = 0, dense_pass = 0;
  std::string first_failure;
  for (const auto& c : mono_results) {
    if (c.ok()) {
      ++mono_pass;
    } else if (first_failure.empty()) {
      first_failure = monomial_failure(c);
    }
  }
  for (std::size_t i = 0; i < dense_results.size(); ++i) {
    if (dense_results[i].ok()) {
      ++dense_pass;
    } else if (first_failure.empty()) {
      first_failure = dense_failure(dense[i].gens, dense_results[i]);
    }
  }

  std::ostringstream os;
  os << "corpus                       cases   pass   fail\n";
  auto line = [&](const char* name, std::size_t total, std::size_t pass) {
    os << name;
    for (std::size_t k = std::string(name).size(); k < 27; ++k) os << ' ';
    os << std::string(8 - std::min<std::size_t>(8, std::to_string(total).size()), ' ') << total
       << std::string(7 - std::min<std::size_t>(7, std::to_string(pass).size()), ' ') << pass
       << std::string(7 - std::min<std::size_t>(7, std::to_string(total - pass).size()), ' ')
       << (total - pass) << "\n";
  };
  std::size_t exhaustive_pass = 0;
  for (std::size_t i = 0; i < exhaustive; ++i) exhaustive_pass += mono_results[i].ok();
  line("monomial exhaustive", exhaustive, exhaustive_pass);
  line("monomial random", mono.size() - exhaustive, mono_pass - exhaustive_pass);
  line("dense", dense.size(), dense_pass);
  const std::size_t total = mono.size() + dense.size();
  const bool all = mono_pass + dense_pass == total;
  os << (all ? "all " + std::to_string(total) + " cases passed\n" : "");
  if (!all) os << "first counterexample: " << first_failure << "\n";
  return {all ? kOk : kSelftestFailure, os.str(), ""};
}

}  // namespace ratcurve::app
