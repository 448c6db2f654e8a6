#ifndef BELNAP_TESTS_HELPERS_HPP
#define BELNAP_TESTS_HELPERS_HPP

#include <string_view>

#include "belnap/entailment.hpp"
#include "belnap/judgment.hpp"

inline belnap::Formula F(std::string_view text) { return belnap::parse_formula(text); }
inline belnap::Judgment J(std::string_view text) { return belnap::parse_judgment(text); }
inline belnap::Agent A(std::string_view text) { return belnap::parse_agent(text); }

#endif  // BELNAP_TESTS_HELPERS_HPP
