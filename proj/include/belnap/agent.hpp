#ifndef BELNAP_AGENT_HPP
#define BELNAP_AGENT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "belnap/formula.hpp"
#include "belnap/four.hpp"

namespace belnap {

// Cognitive attitudes an agent entertains towards a formula. Accept and
// not_accept are complementary, as are reject and not_reject.
enum class Attitude { accept, not_accept, reject, not_reject };

inline constexpr std::array<Attitude, 4> kAllAttitudes{
    Attitude::accept, Attitude::not_accept, Attitude::reject, Attitude::not_reject};

constexpr bool holds(FourValue v, Attitude a) noexcept {
  switch (a) {
    case Attitude::accept: return v.has_t;
    case Attitude::not_accept: return !v.has_t;
    case Attitude::reject: return v.has_f;
    case Attitude::not_reject: return !v.has_f;
  }
  return false;
}

std::string_view attitude_name(Attitude a) noexcept;

// Default cap on the number of atoms for exhaustive enumeration (4^12 agents).
inline constexpr std::size_t kDefaultMaxAtoms = 12;

// Total assignment of values to a finite, declared set of atoms.
class Agent {
 public:
  using Assignment = std::map<std::string, FourValue, std::less<>>;

  Agent() = default;
  explicit Agent(Assignment assignment);

  const Assignment& assignment() const noexcept { return assignment_; }
  std::set<std::string> domain() const;
  bool assigns(std::string_view atom) const;
  // Throws UnknownAtomError if `atom` is outside the domain.
  FourValue value(std::string_view atom) const;

  friend bool operator==(const Agent&, const Agent&) = default;

 private:
  Assignment assignment_;
};

// Homomorphic extension of the agent's assignment: ~ is neg_t, & is meet_t
// and | is join_t. Throws UnknownAtomError for atoms outside the domain.
FourValue evaluate(const Agent& s, const Formula& f);
bool holds(const Agent& s, const Formula& f, Attitude a);

// Agent s* with: s* not-rejects φ iff s accepts φ, s* accepts φ iff s
// not-rejects φ, and dually for the other two attitudes.
Agent star(const Agent& s);

// All 4^n agents over a domain, in a fixed order: atoms sorted, the last atom
// cycling fastest through f, n, b, t. Index ranges are disjoint slices of the
// same order, so callers may split the space across workers.
class AgentSpace {
 public:
  explicit AgentSpace(const std::set<std::string>& domain,
                      std::size_t max_atoms = kDefaultMaxAtoms);

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  std::uint64_t size() const noexcept { return size_; }
  Agent operator[](std::uint64_t index) const;
  // Values of the agent at `index`, in atoms() order.
  void values_at(std::uint64_t index, std::vector<FourValue>& out) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Agent;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const AgentSpace* space, std::uint64_t index) : space_(space), index_(index) {}
    Agent operator*() const { return (*space_)[index_]; }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++index_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const AgentSpace* space_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  std::vector<std::string> atoms_;
  std::uint64_t size_;
};

// Throws DomainTooLargeError when |domain| > max_atoms.
AgentSpace all_agents(const std::set<std::string>& domain,
                      std::size_t max_atoms = kDefaultMaxAtoms);

// Agent text: "p=b,q=t". Values are f, n, b, t (any case).
Agent parse_agent(std::string_view text);
std::string format_agent(const Agent& s);

}  // namespace belnap

#endif  // BELNAP_AGENT_HPP
