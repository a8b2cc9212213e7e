#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/field.hpp"
#include "ratcurve/mono_oracle.hpp"

namespace ratcurve::app {

// Runs fn(i) for i in [0, count) on a small thread pool; results are stored
// by index so the report does not depend on scheduling.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, Fn fn) {
  std::vector<Result> out(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

/// Deliberate faults injected by the selftest negative control.
enum class Mutation { None, MapDegree, Syzygy };
Mutation parse_mutation(const std::string& name);

struct MonomialCheck {
  MonomialParam param;
  int oracle_r = 0;
  int r = 0;
  bool degree_matches = false;
  bool phi_matches_oracle = false;  // same column degrees as the oracle, both verified
  bool closure_iff = false;         // newton_closure(core) == core  iff  r == 1
  std::string error;

  bool ok() const { return error.empty() && degree_matches && phi_matches_oracle && closure_iff; }
};

MonomialCheck check_monomial(const PrimeField& f, const MonomialParam& m, std::uint64_t seed,
                             Mutation mut = Mutation::None);

struct DenseCase {
  std::vector<BinaryForm<PrimeField>> gens;
  int composed_r = 1;  // > 1 when built as h(f1, f2) with deg f_i = composed_r
};

/// 2 <= n <= 6, n <= d <= 15. About a third of the cases are compositions
/// h_i(f1, f2) with deg f_i > 1, so non-birational maps are represented.
std::vector<DenseCase> dense_corpus(const PrimeField& f, Rng& rng, int count);

struct DenseCheck {
  int d = 0;
  std::size_t n = 0;
  int r = 0;
  std::size_t e = 0;
  std::size_t j = 0;
  std::vector<int> col_degrees;
  bool degree_identity = false;  // r * e(A) == d
  bool divides_columns = false;  // r | D_j
  bool j_is_d_squared = false;
  bool hb_valid = false;
  bool reparam_coprime = false;
  bool reparam_degree = false;
  bool reparam_extension = false;
  bool reparam_degree_one = false;
  bool core_in_reductions = false;  // core contained in two random minimal reductions
  bool core_iff = false;            // core == m^(2d-1)  iff  r == 1
  bool prime_degree_applicable = false;
  bool prime_degree_ok = true;
  bool consistent = false;
  std::string error;

  bool ok() const {
    return error.empty() && degree_identity && divides_columns && j_is_d_squared && hb_valid &&
           reparam_coprime && reparam_degree && reparam_extension && reparam_degree_one &&
           core_in_reductions && core_iff && prime_degree_ok && consistent;
  }
};

DenseCheck check_dense(const PrimeField& f, const DenseCase& c, std::uint64_t seed,
                       Mutation mut = Mutation::None);

std::string describe(const std::vector<BinaryForm<PrimeField>>& gens);

}  // namespace ratcurve::app
