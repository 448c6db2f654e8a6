#ifndef BELNAP_ERRORS_HPP
#define BELNAP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace belnap {

// Base class of every error raised for bad user input or exceeded limits.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula, judgment or agent text. `offset` is a byte offset into
// the text that was handed to the parser.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string found);

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t offset_;
  std::string expected_;
  std::string found_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(std::string atom);
  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

// Raised when exhaustive enumeration would exceed the configured atom cap.
class DomainTooLargeError : public Error {
 public:
  DomainTooLargeError(std::size_t cap, std::size_t requested);
  std::size_t cap() const noexcept { return cap_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::size_t cap_;
  std::size_t requested_;
};

// Misuse of a sequent rule: principal missing, atomic principal, or a
// non-atomic sequent handed to the atomic axiom test.
class RuleError : public Error {
 public:
  enum class Kind { formula_not_found, atomic_principal, non_atomic_sequent };

  RuleError(Kind kind, const std::string& what);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Structurally invalid serialized data (proof files, JSON documents).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace belnap

#endif  // BELNAP_ERRORS_HPP
