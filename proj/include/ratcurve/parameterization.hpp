#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/error.hpp"

namespace ratcurve {

/// n >= 2 linearly independent forms of a common degree d >= 1 without a
/// common factor: a morphism P^1 -> P^(n-1).
template <class F>
class Parameterization {
 public:
  /// Validates the invariants, throwing Error(InvalidParameterization) with a
  /// message naming the first violated one.
  static Parameterization create(std::vector<BinaryForm<F>> gens) {
    if (gens.size() < 2) {
      throw Error(ErrorCode::InvalidParameterization, "need at least two generators");
    }
    for (const auto& g : gens) {
      if (g.is_zero()) throw Error(ErrorCode::InvalidParameterization, "zero generator");
    }
    const int d = gens.front().degree();
    for (const auto& g : gens) {
      if (g.degree() != d) {
        throw Error(ErrorCode::InvalidParameterization,
                    "degree mismatch: generators of degrees " + std::to_string(d) + " and " +
                        std::to_string(g.degree()));
      }
    }
    if (d < 1) throw Error(ErrorCode::InvalidParameterization, "generators must have positive degree");
    if (gens.size() > static_cast<std::size_t>(d) + 1 || li_dim(gens, d) != gens.size()) {
      throw Error(ErrorCode::InvalidParameterization, "linearly dependent generators");
    }
    if (!gcd_forms(gens).is_constant()) {
      throw Error(ErrorCode::InvalidParameterization, "generators share a common factor");
    }
    return Parameterization(std::move(gens), d);
  }

  const F& field() const { return gens_.front().field(); }
  int degree() const { return d_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<BinaryForm<F>>& gens() const { return gens_; }
  const BinaryForm<F>& operator[](std::size_t i) const { return gens_[i]; }

 private:
  Parameterization(std::vector<BinaryForm<F>> gens, int d) : gens_(std::move(gens)), d_(d) {}

  std::vector<BinaryForm<F>> gens_;
  int d_;
};

}  // namespace ratcurve
