#ifndef BELNAP_SRC_COMPILED_HPP
#define BELNAP_SRC_COMPILED_HPP

#include <span>
#include <string>
#include <vector>

#include "belnap/formula.hpp"
#include "belnap/four.hpp"

namespace belnap::detail {

// Postfix program for a formula with atoms resolved to indices into a value
// vector, so the enumeration loop avoids map lookups.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const std::vector<std::string>& atoms);

  FourValue evaluate(std::span<const FourValue> values, std::vector<FourValue>& stack) const;

 private:
  struct Op {
    Connective connective;
    std::size_t atom;
  };
  void emit(const Formula& f, const std::vector<std::string>& atoms);

  std::vector<Op> ops_;
};

}  // namespace belnap::detail

#endif  // BELNAP_SRC_COMPILED_HPP
