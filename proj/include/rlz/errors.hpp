#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "rlz/types.hpp"

namespace rlz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction-time failures (e.g. empty reference).
struct BuildError : Error {
    using Error::Error;
};

// A document symbol that never occurs in the reference cannot be parsed.
struct MissingSymbol : Error {
    std::uint64_t doc;       // 1-based document id, 0 when not yet attached
    std::uint64_t position;  // 1-based position within the document
    Symbol symbol;

    MissingSymbol(std::uint64_t doc_id, std::uint64_t pos, Symbol sym)
        : Error("symbol '" + printable(sym) + "' at position " + std::to_string(pos) +
                (doc_id ? " of document " + std::to_string(doc_id) : std::string()) +
                " does not occur in the reference"),
          doc(doc_id),
          position(pos),
          symbol(sym) {}

    static std::string printable(Symbol sym) {
        if (sym >= 0x20 && sym < 0x7f) return std::string(1, static_cast<char>(sym));
        char buf[8];
        std::snprintf(buf, sizeof buf, "\\x%02x", sym);
        return buf;
    }
};

struct OutOfRange : Error {
    using Error::Error;
};

struct InvalidPattern : Error {
    using Error::Error;
};

struct MalformedFasta : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct BadMagic : Error {
    using Error::Error;
};

struct VersionMismatch : Error {
    using Error::Error;
};

struct ChecksumMismatch : Error {
    using Error::Error;
};

}  // namespace rlz
