#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ratcurve/field.hpp"
#include "ratcurve/parameterization.hpp"
#include "ratcurve/poly_io.hpp"

namespace ratcurve {

/// Parsed instance file. Generators are kept field-independent until the
/// caller picks the field named in the header.
struct Instance {
  FieldConfig field;
  std::vector<std::string> generator_text;
  std::vector<TermMap> generators;
};

/// Format:
///   field: prime <p> | field: rational
///   seed: <int>
///   one generator per remaining non-blank line ('#' starts a comment)
/// Errors are Error(Parse) or Error(InvalidField) and carry the line number.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

template <class F>
Parameterization<F> build_parameterization(const F& field, const Instance& inst) {
  std::vector<BinaryForm<F>> gens;
  for (std::size_t i = 0; i < inst.generators.size(); ++i) {
    try {
      gens.push_back(to_form(field, inst.generators[i]));
    } catch (const Error& e) {
      throw Error(e.code(), "generator " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return Parameterization<F>::create(std::move(gens));
}

}  // namespace ratcurve
