#pragma once

#include <stdexcept>
#include <string>

namespace atrans {

// Thrown for malformed text input (hypergraph files, profile syntax, CLI params).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace atrans
