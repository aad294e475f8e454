#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commat {

/// Error taxonomy shared by the library and the CLI. The CLI maps these to
/// exit codes: 2 usage/parse, 3 domain, 4 numerical validation, 5 I/O.

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct OutOfRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// spectral validation failures
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotUnitary : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCommuting : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotReal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonOrthogonalBlocks : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotConjugationClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace commat
