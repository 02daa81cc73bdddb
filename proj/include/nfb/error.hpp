#pragma once

#include <stdexcept>
#include <string>

namespace nfb {

// Error taxonomy, mirrored by CLI exit codes:
//   ParseError/ValidationError -> usage (64), CapError -> cap (65), IoError -> i/o (66).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// Violated precondition or inconsistent structure (bad table, bad params, ...).
struct ValidationError : Error {
    using Error::Error;
};

// A configured search/size cap would be exceeded.  Caps are hard errors,
// never silent truncation.
struct CapError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace nfb
