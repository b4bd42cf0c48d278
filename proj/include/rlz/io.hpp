#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rlz/index.hpp"
#include "rlz/types.hpp"

namespace rlz {

struct NamedSequence {
    std::string name;
    Sequence seq;
};

enum class InputFormat { fasta, raw };

// FASTA records: header text after '>' is the name, sequence lines are
// concatenated with every non-whitespace character kept as a symbol,
// letters uppercased.  Throws MalformedFasta on empty input, a record
// with no sequence, or content before the first header.
std::vector<NamedSequence> parse_fasta(std::string_view content);

// Reads each path: fasta files contribute one entry per record, raw
// files one entry holding the whole file verbatim (named by the path).
// Throws IoError on an unreadable file.
std::vector<NamedSequence> ingest(const std::vector<std::string>& paths, InputFormat format);

// On-disk layout, all integers little-endian: magic "RLZI", version
// (32-bit), header (n, N, r, d, doc count as 64-bit plus a 256-byte
// symbol presence map), seven sections back to back, a table of
// (absolute offset, byte length) per section, and a trailing 64-bit
// FNV-1a checksum of everything before it.  Positions are stored
// 0-based; ranks and keys verbatim.
std::string serialize(const RlzIndex& index);

// Rejects in order: unreadable/truncated structure (ChecksumMismatch),
// wrong magic (BadMagic), wrong version (VersionMismatch), checksum
// failure (ChecksumMismatch).
RlzIndex deserialize(std::string_view bytes);

void save(const RlzIndex& index, const std::string& path);
RlzIndex load(const std::string& path);

struct SectionInfo {
    std::string name;
    std::uint64_t offset = 0;
    std::uint64_t size = 0;
};

// The section table of a serialized index, in file order.
std::vector<SectionInfo> describe_sections(std::string_view bytes);

}  // namespace rlz
