// Fixed judgments with known verdicts: conjunction introduction in each
// placement of premises and conclusion, explosion, and excluded middle.
#ifndef BELNAP_TESTS_FIXED_CASES_HPP
#define BELNAP_TESTS_FIXED_CASES_HPP

#include <array>
#include <string_view>

struct FixedCase {
  std::string_view group;
  std::string_view judgment;
  bool valid;
  std::string_view first_countermodel;  // first refuting agent in enumeration order
};

inline constexpr std::array<FixedCase, 16> kFixedCases{{
    {"conjunction", "a, b : |- : a & b", true, ""},
    {"conjunction", ": a, b |- a & b :", true, ""},
    {"conjunction", ": a, b |- : a & b", false, "a=n,b=n"},
    {"conjunction", "b : a |- : a & b", false, "a=n,b=b"},
    {"conjunction", "a, b : |- a & b :", false, "a=b,b=b"},
    {"conjunction", "b : a |- a & b :", false, "a=n,b=b"},
    {"conjunction", "a : b |- a & b :", false, "a=b,b=n"},
    {"conjunction", "a : b |- : a & b", false, "a=b,b=n"},
    {"explosion", "a & ~a : |- : b", false, "a=b,b=f"},
    {"explosion", ": a & ~a |- b :", false, "a=n,b=f"},
    {"explosion", ": a & ~a |- : b", false, "a=n,b=f"},
    {"explosion", "a & ~a : |- b :", false, "a=b,b=f"},
    {"excluded middle", "b : |- : ~a | a", false, "a=n,b=b"},
    {"excluded middle", ": b |- ~a | a :", false, "a=b,b=n"},
    {"excluded middle", ": b |- : ~a | a", false, "a=n,b=n"},
    {"excluded middle", "b : |- ~a | a :", false, "a=b,b=b"},
}};

#endif  // BELNAP_TESTS_FIXED_CASES_HPP
