#ifndef BELNAP_FOUR_HPP
#define BELNAP_FOUR_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>

namespace belnap {

// An element of FOUR, stored as its subset of {T, F}: `has_t` is the true
// part, `has_f` the false part.
struct FourValue {
  bool has_t = false;
  bool has_f = false;

  friend constexpr bool operator==(FourValue, FourValue) = default;

  // Position in the enumeration order f, n, b, t.
  constexpr int index() const noexcept { return has_t ? (has_f ? 2 : 3) : (has_f ? 0 : 1); }
};

inline constexpr FourValue kFalse{false, true};     // {F}
inline constexpr FourValue kNeither{false, false};  // {} (bottom of the information order)
inline constexpr FourValue kBoth{true, true};       // {T, F} (top of the information order)
inline constexpr FourValue kTrue{true, false};      // {T}

inline constexpr std::array<FourValue, 4> kAllValues{kFalse, kNeither, kBoth, kTrue};

// Which logical order is in force: FOUR uses `standard`, FOUR⁻ flips it.
enum class TruthOrder { standard, inverse };

constexpr bool leq_t(FourValue x, FourValue y) noexcept {
  return (!x.has_t || y.has_t) && (!y.has_f || x.has_f);
}

constexpr bool leq_i(FourValue x, FourValue y) noexcept {
  return (!x.has_t || y.has_t) && (!x.has_f || y.has_f);
}

constexpr FourValue meet_t(FourValue x, FourValue y) noexcept {
  return {x.has_t && y.has_t, x.has_f || y.has_f};
}

constexpr FourValue join_t(FourValue x, FourValue y) noexcept {
  return {x.has_t || y.has_t, x.has_f && y.has_f};
}

constexpr FourValue neg_t(FourValue x) noexcept { return {x.has_f, x.has_t}; }

constexpr FourValue meet_i(FourValue x, FourValue y) noexcept {
  return {x.has_t && y.has_t, x.has_f && y.has_f};
}

constexpr FourValue join_i(FourValue x, FourValue y) noexcept {
  return {x.has_t || y.has_t, x.has_f || y.has_f};
}

// Conflation: fixes f and t, swaps n and b.
constexpr FourValue conflate(FourValue x) noexcept { return {!x.has_f, !x.has_t}; }

constexpr bool leq_t(FourValue x, FourValue y, TruthOrder order) noexcept {
  return order == TruthOrder::standard ? leq_t(x, y) : leq_t(y, x);
}

constexpr FourValue meet_t(FourValue x, FourValue y, TruthOrder order) noexcept {
  return order == TruthOrder::standard ? meet_t(x, y) : join_t(x, y);
}

constexpr FourValue join_t(FourValue x, FourValue y, TruthOrder order) noexcept {
  return order == TruthOrder::standard ? join_t(x, y) : meet_t(x, y);
}

// Subset of the four values, one bit per value index.
class ValueSet {
 public:
  constexpr ValueSet() = default;
  constexpr ValueSet(std::initializer_list<FourValue> values) {
    for (FourValue v : values) insert(v);
  }
  static constexpr ValueSet from_bits(std::uint8_t bits) {
    ValueSet s;
    s.bits_ = bits & 0xF;
    return s;
  }

  constexpr void insert(FourValue v) noexcept { bits_ |= std::uint8_t(1u << v.index()); }
  constexpr bool contains(FourValue v) const noexcept { return (bits_ >> v.index()) & 1u; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept {
    return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1) + ((bits_ >> 3) & 1);
  }

  friend constexpr bool operator==(ValueSet, ValueSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

// Designated sets of the symmetric matrix: accepted values and rejected values.
inline constexpr ValueSet kAccepted{kBoth, kTrue};
inline constexpr ValueSet kRejected{kFalse, kBoth};

// Non-empty proper subset whose membership commutes with the meets of the
// chosen logical order and of the information order.
bool is_bifilter(ValueSet s, TruthOrder order);
// Bifilter whose membership also commutes with both joins.
bool is_prime_bifilter(ValueSet s, TruthOrder order);

// Text names: f, n (neither), b (both), t.
char value_char(FourValue v) noexcept;
std::optional<FourValue> value_from_char(char c) noexcept;
std::optional<FourValue> value_from_name(std::string_view name) noexcept;

}  // namespace belnap

#endif  // BELNAP_FOUR_HPP
