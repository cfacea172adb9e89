#pragma once

#include <stdexcept>
#include <string>

namespace iocr {

// Dictionary/manifest text that violates the documented file formats.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Inputs that are well-formed but unusable (missing files, unsatisfiable
// constraints, unknown ballot ids, ...).
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Matcher wiring problems: empty or missing contest groups.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A ballot whose cleaned line count does not fit the fixed layout.
class StructuralError : public std::runtime_error {
  public:
    StructuralError(std::string ballot_id, const std::string& what)
        : std::runtime_error(what), ballot_id_(std::move(ballot_id)) {}

    const std::string& ballot_id() const { return ballot_id_; }

  private:
    std::string ballot_id_;
};

// Merging tallies that were built against different lexicons.
class MergeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace iocr
