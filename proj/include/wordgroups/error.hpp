#ifndef WORDGROUPS_ERROR_HPP_
#define WORDGROUPS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordgroups {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Inputs for which no sound algorithm is provided (non-primitive
// substitutions, non prefix-code images, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A query needed factors longer than the oracle materialized.
class HorizonExceeded : public Error {
 public:
  HorizonExceeded(std::size_t required, std::size_t available,
                  const std::string& context = {})
      : Error("horizon exceeded: required " + std::to_string(required) +
              ", available " + std::to_string(available) +
              (context.empty() ? std::string() : " (" + context + ")")),
        required_(required),
        available_(available) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

}  // namespace wordgroups

#endif  // WORDGROUPS_ERROR_HPP_
