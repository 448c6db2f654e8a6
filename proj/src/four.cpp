#include "belnap/four.hpp"

#include <cctype>

namespace belnap {

namespace {

// `meet` and `join` are the infimum and supremum of the order under test.
template <class Meet>
bool reflects_meet(ValueSet s, Meet meet) {
  for (FourValue x : kAllValues)
    for (FourValue y : kAllValues)
      if (s.contains(meet(x, y)) != (s.contains(x) && s.contains(y))) return false;
  return true;
}

template <class Join>
bool reflects_join(ValueSet s, Join join) {
  for (FourValue x : kAllValues)
    for (FourValue y : kAllValues)
      if (s.contains(join(x, y)) != (s.contains(x) || s.contains(y))) return false;
  return true;
}

}  // namespace

bool is_bifilter(ValueSet s, TruthOrder order) {
  if (s.empty() || s.size() == 4) return false;
  auto meet_truth = [order](FourValue x, FourValue y) { return meet_t(x, y, order); };
  auto meet_info = [](FourValue x, FourValue y) { return meet_i(x, y); };
  return reflects_meet(s, meet_truth) && reflects_meet(s, meet_info);
}

bool is_prime_bifilter(ValueSet s, TruthOrder order) {
  if (!is_bifilter(s, order)) return false;
  auto join_truth = [order](FourValue x, FourValue y) { return join_t(x, y, order); };
  auto join_info = [](FourValue x, FourValue y) { return join_i(x, y); };
  return reflects_join(s, join_truth) && reflects_join(s, join_info);
}

char value_char(FourValue v) noexcept { return "fnbt"[v.index()]; }

std::optional<FourValue> value_from_char(char c) noexcept {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'f': return kFalse;
    case 'n': return kNeither;
    case 'b': return kBoth;
    case 't': return kTrue;
    default: return std::nullopt;
  }
}

std::optional<FourValue> value_from_name(std::string_view name) noexcept {
  if (name.size() != 1) return std::nullopt;
  return value_from_char(name[0]);
}

}  // namespace belnap
