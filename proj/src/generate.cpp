#include "belnap/generate.hpp"

#include <algorithm>

namespace belnap {

std::vector<Formula> formulas_up_to_depth(const std::vector<std::string>& atoms,
                                          std::size_t max_depth) {
  if (max_depth == 0) return {};
  // layers[d] holds the formulas of depth exactly d + 1.
  std::vector<std::vector<Formula>> layers(1);
  for (const auto& a : atoms) layers[0].push_back(Formula::atom(a));
  std::sort(layers[0].begin(), layers[0].end());

  std::vector<Formula> below = layers[0];  // all formulas of smaller depth
  for (std::size_t d = 1; d < max_depth; ++d) {
    const auto& top = layers[d - 1];
    std::vector<Formula> next;
    for (const auto& f : top) next.push_back(Formula::negation(f));
    // Binary formulas whose taller child sits in `top`.
    for (const auto& l : below)
      for (const auto& r : below) {
        bool l_top = l.depth() == d;
        bool r_top = r.depth() == d;
        if (!l_top && !r_top) continue;
        next.push_back(Formula::conjunction(l, r));
        next.push_back(Formula::disjunction(l, r));
      }
    std::sort(next.begin(), next.end());
    below.insert(below.end(), next.begin(), next.end());
    layers.push_back(std::move(next));
  }

  std::vector<Formula> out;
  for (auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

FormulaSampler::FormulaSampler(std::vector<std::string> atoms, std::size_t max_depth,
                               std::uint64_t seed)
    : atoms_(std::move(atoms)), max_depth_(std::max<std::size_t>(max_depth, 1)), engine_(seed) {}

std::size_t FormulaSampler::uniform(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
}

Formula FormulaSampler::formula() { return formula(max_depth_); }

Formula FormulaSampler::formula(std::size_t max_depth) {
  if (max_depth <= 1 || uniform(4) == 0) return Formula::atom(atoms_[uniform(atoms_.size())]);
  switch (uniform(3)) {
    case 0: return Formula::negation(formula(max_depth - 1));
    case 1: return Formula::conjunction(formula(max_depth - 1), formula(max_depth - 1));
    default: return Formula::disjunction(formula(max_depth - 1), formula(max_depth - 1));
  }
}

FormulaSet FormulaSampler::formula_set(std::size_t max_size) {
  FormulaSet out;
  std::size_t n = uniform(max_size + 1);
  for (std::size_t i = 0; i < n; ++i) out.insert(formula());
  return out;
}

Judgment FormulaSampler::judgment(std::size_t max_per_position) {
  Judgment j;
  for (Position p : kAllPositions) j.at(p) = formula_set(max_per_position);
  return j;
}

}  // namespace belnap
