#ifndef BELNAP_GENERATE_HPP
#define BELNAP_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "belnap/formula.hpp"
#include "belnap/judgment.hpp"

namespace belnap {

// Every formula over `atoms` with depth <= max_depth (atoms have depth 1),
// ordered by depth and then canonically.
std::vector<Formula> formulas_up_to_depth(const std::vector<std::string>& atoms,
                                          std::size_t max_depth);

// Seeded random formulas, sets and judgments for property tests.
class FormulaSampler {
 public:
  FormulaSampler(std::vector<std::string> atoms, std::size_t max_depth, std::uint64_t seed);

  Formula formula();
  Formula formula(std::size_t max_depth);
  // Up to `max_size` distinct formulas (possibly none).
  FormulaSet formula_set(std::size_t max_size);
  Judgment judgment(std::size_t max_per_position);
  std::size_t uniform(std::size_t bound);  // in [0, bound)

 private:
  std::vector<std::string> atoms_;
  std::size_t max_depth_;
  std::mt19937_64 engine_;
};

}  // namespace belnap

#endif  // BELNAP_GENERATE_HPP
