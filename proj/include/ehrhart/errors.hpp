#pragma once

#include <stdexcept>
#include <string>

namespace ehr {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: files, vector literals, serialized objects. CLI exit 2.
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// An operation was called outside its contract (dimension mismatch, polytope
// not full-dimensional, not centrally symmetric over Z, ...). CLI exit 3.
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// Quasi-polynomial fitting: the validation samples disagree with the
// interpolant, i.e. the data is not a degree-<=d quasi-polynomial of the
// requested period.
struct validation_error : error {
    explicit validation_error(const std::string& msg) : error(msg) {}
};

// Desk-scale soft limits (dimension / facet count) exceeded.
struct limit_error : precondition_error {
    explicit limit_error(const std::string& msg) : precondition_error(msg) {}
};

}  // namespace ehr
