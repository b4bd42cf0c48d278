#include "rlz/io.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <sstream>

#include "rlz/errors.hpp"

namespace rlz {

namespace {

constexpr char kMagic[4] = {'R', 'L', 'Z', 'I'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kSectionCount = 7;
constexpr std::size_t kHeaderSize = 4 + 4 + 5 * 8 + 256;
constexpr std::size_t kTableSize = kSectionCount * 16;

const char* const kSectionNames[kSectionCount] = {
    "reference", "suffix_lcp", "parse", "dictionary",
    "phrase_seq", "boundary_grid", "source_grid"};

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

class Cursor {
public:
    explicit Cursor(std::string_view bytes) : bytes_(bytes) {}

    std::uint64_t u64() {
        if (pos_ + 8 > bytes_.size()) throw ChecksumMismatch("index file truncated");
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i]))
                 << (8 * i);
        pos_ += 8;
        return v;
    }

    std::string_view raw(std::uint64_t len) {
        if (len > bytes_.size() - pos_) throw ChecksumMismatch("index file truncated");
        std::string_view v = bytes_.substr(pos_, len);
        pos_ += len;
        return v;
    }

    void seek(std::uint64_t pos) { pos_ = pos; }
    std::uint64_t pos() const { return pos_; }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

struct SectionTable {
    std::uint64_t offset[kSectionCount];
    std::uint64_t size[kSectionCount];
};

// Shared structural parse of the fixed-size parts; throws the typed
// errors in the documented order.
SectionTable check_envelope(std::string_view bytes) {
    if (bytes.size() < 16) throw ChecksumMismatch("index file truncated");
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw BadMagic("not an index file");
    std::uint32_t version = 0;
    for (int i = 0; i < 4; ++i)
        version |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[4 + i])) << (8 * i);
    if (version != kVersion) throw VersionMismatch("unsupported index version");
    std::string_view body = bytes.substr(0, bytes.size() - 8);
    Cursor tail(bytes);
    tail.seek(bytes.size() - 8);
    if (fnv1a(body) != tail.u64()) throw ChecksumMismatch("index checksum failed");
    if (bytes.size() < kHeaderSize + kTableSize + 8)
        throw ChecksumMismatch("index file truncated");

    SectionTable table;
    Cursor cur(bytes);
    cur.seek(bytes.size() - 8 - kTableSize);
    for (std::size_t s = 0; s < kSectionCount; ++s) {
        table.offset[s] = cur.u64();
        table.size[s] = cur.u64();
        if (table.offset[s] + table.size[s] > bytes.size() - 8 - kTableSize)
            throw ChecksumMismatch("index section out of bounds");
    }
    return table;
}

}  // namespace

std::vector<NamedSequence> parse_fasta(std::string_view content) {
    std::vector<NamedSequence> records;
    bool in_record = false;
    std::size_t i = 0;
    const std::size_t len = content.size();
    while (i < len) {
        char c = content[i];
        if (c == '>') {
            std::size_t eol = content.find('\n', i);
            if (eol == std::string_view::npos) eol = len;
            std::string name(content.substr(i + 1, eol - i - 1));
            while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
                name.pop_back();
            records.push_back(NamedSequence{std::move(name), {}});
            in_record = true;
            i = eol + 1;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else {
            if (!in_record) throw MalformedFasta("sequence data before first header");
            records.back().seq.push_back(
                static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            ++i;
        }
    }
    if (records.empty()) throw MalformedFasta("no records");
    for (const NamedSequence& rec : records)
        if (rec.seq.empty()) throw MalformedFasta("record with empty sequence: " + rec.name);
    return records;
}

std::vector<NamedSequence> ingest(const std::vector<std::string>& paths, InputFormat format) {
    std::vector<NamedSequence> out;
    for (const std::string& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad()) throw IoError("cannot read " + path);
        std::string content = std::move(buf).str();
        if (format == InputFormat::raw) {
            out.push_back(NamedSequence{path, std::move(content)});
        } else {
            for (NamedSequence& rec : parse_fasta(content)) out.push_back(std::move(rec));
        }
    }
    return out;
}

std::string serialize(const RlzIndex& index) {
    const ReferenceIndex& ref = index.reference();
    const Parse& parse = index.parse();
    const PhraseDict& dict = index.dict();
    const PhraseSequence& seq = index.primary().seq;
    const SourceGrid& sgrid = index.source_grid();
    const std::uint64_t n = ref.size();

    std::string out;
    out.append(kMagic, 4);
    put_u32(out, kVersion);
    put_u64(out, n);
    put_u64(out, parse.total_len);
    put_u64(out, parse.phrase_count());
    put_u64(out, dict.size());
    put_u64(out, parse.doc_count());
    for (unsigned c = 0; c < 256; ++c)
        out.push_back(ref.contains_symbol(static_cast<Symbol>(c)) ? 1 : 0);

    std::uint64_t offset[kSectionCount];
    std::uint64_t size[kSectionCount];
    std::size_t sec = 0;
    auto begin_section = [&] { offset[sec] = out.size(); };
    auto end_section = [&] { size[sec] = out.size() - offset[sec]; ++sec; };

    begin_section();  // reference
    out.append(ref.text());
    end_section();

    begin_section();  // suffix_lcp
    for (int rev = 0; rev < 2; ++rev) {
        for (std::uint64_t k = 1; k <= n; ++k) put_u64(out, ref.suffix_at(k, rev) - 1);
        for (std::uint64_t k = 2; k <= n; ++k) put_u64(out, ref.lcp_at(k, rev));
    }
    end_section();

    begin_section();  // parse
    {
        std::uint64_t k = 0;
        for (const DocBound& db : parse.docs) {
            std::uint64_t count = 0;
            while (k + count < parse.phrase_count() &&
                   parse.text_start[k + count] < db.start + db.len)
                ++count;
            put_u64(out, count);
            k += count;
        }
    }
    for (const Phrase& ph : parse.phrases) {
        put_u64(out, ph.src_start - 1);
        put_u64(out, ph.len);
    }
    end_section();

    begin_section();  // dictionary
    for (std::uint64_t key : dict.keys()) put_u64(out, key);
    end_section();

    begin_section();  // phrase_seq
    for (std::uint64_t sym : seq.syms()) put_u64(out, sym);
    end_section();

    begin_section();  // boundary_grid
    for (std::uint64_t b = 1; b <= seq.boundary_count(); ++b)
        put_u64(out, seq.rank_of_boundary(b));
    end_section();

    begin_section();  // source_grid
    for (const SourceGrid::Point& p : sgrid.points()) put_u64(out, p.text_pos - 1);
    end_section();

    for (std::size_t s = 0; s < kSectionCount; ++s) {
        put_u64(out, offset[s]);
        put_u64(out, size[s]);
    }
    put_u64(out, fnv1a(out));
    return out;
}

RlzIndex deserialize(std::string_view bytes) {
    SectionTable table = check_envelope(bytes);

    Cursor cur(bytes);
    cur.seek(8);
    const std::uint64_t n = cur.u64();
    const std::uint64_t total_len = cur.u64();
    const std::uint64_t r = cur.u64();
    const std::uint64_t d = cur.u64();
    const std::uint64_t doc_count = cur.u64();

    auto expect_size = [&](std::size_t s, std::uint64_t want) {
        if (table.size[s] != want) throw ChecksumMismatch("index section size mismatch");
    };

    RlzIndex::Parts parts;

    expect_size(0, n);
    cur.seek(table.offset[0]);
    parts.reference = Sequence(cur.raw(n));

    expect_size(1, n ? 8 * (4 * n - 2) : 0);
    cur.seek(table.offset[1]);
    auto read_vec = [&](std::vector<std::uint64_t>& v, std::uint64_t count, std::uint64_t bias) {
        v.resize(count);
        for (std::uint64_t i = 0; i < count; ++i) v[i] = cur.u64() + bias;
    };
    read_vec(parts.sa_fwd, n, 1);
    read_vec(parts.lcp_fwd, n ? n - 1 : 0, 0);
    read_vec(parts.sa_rev, n, 1);
    read_vec(parts.lcp_rev, n ? n - 1 : 0, 0);

    expect_size(2, 8 * (doc_count + 2 * r));
    cur.seek(table.offset[2]);
    std::vector<std::uint64_t> doc_phrases(doc_count);
    std::uint64_t phrase_total = 0;
    for (std::uint64_t i = 0; i < doc_count; ++i) {
        doc_phrases[i] = cur.u64();
        phrase_total += doc_phrases[i];
    }
    if (phrase_total != r) throw ChecksumMismatch("index phrase counts inconsistent");
    Parse& parse = parts.parse;
    parse.phrases.resize(r);
    parse.text_start.resize(r);
    std::uint64_t pos = 1;
    std::uint64_t k = 0;
    for (std::uint64_t dno = 1; dno <= doc_count; ++dno) {
        std::uint64_t start = pos;
        for (std::uint64_t j = 0; j < doc_phrases[dno - 1]; ++j, ++k) {
            std::uint64_t src0 = cur.u64();
            std::uint64_t len = cur.u64();
            if (len == 0 || src0 + len > n) throw ChecksumMismatch("index phrase malformed");
            parse.phrases[k] = Phrase{src0 + 1, len};
            parse.text_start[k] = pos;
            pos += len;
        }
        parse.docs.push_back(DocBound{dno, start, pos - start});
    }
    parse.total_len = pos - 1;
    if (parse.total_len != total_len) throw ChecksumMismatch("index length inconsistent");

    expect_size(3, 8 * d);
    cur.seek(table.offset[3]);
    read_vec(parts.dict_keys, d, 0);

    expect_size(4, 8 * (r + doc_count));
    cur.seek(table.offset[4]);
    parts.phrase_ranks.reserve(r);
    for (std::uint64_t i = 0; i < r + doc_count; ++i) {
        std::uint64_t sym = cur.u64();
        if (sym > d) throw ChecksumMismatch("index phrase rank out of range");
        if (sym != 0) parts.phrase_ranks.push_back(sym);
    }
    if (parts.phrase_ranks.size() != r) throw ChecksumMismatch("index phrase ranks inconsistent");

    std::uint64_t boundaries = 0;
    for (std::uint64_t c : doc_phrases) boundaries += c ? c - 1 : 0;
    expect_size(5, 8 * boundaries);
    cur.seek(table.offset[5]);
    read_vec(parts.rank_by_boundary, boundaries, 0);
    for (std::uint64_t x : parts.rank_by_boundary)
        if (x == 0 || x > boundaries) throw ChecksumMismatch("index boundary rank out of range");

    expect_size(6, 8 * r);  // source grid order is rebuilt from the parse

    return RlzIndex(std::move(parts));
}

void save(const RlzIndex& index, const std::string& path) {
    std::string bytes = serialize(index);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("cannot write " + path);
}

RlzIndex load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return deserialize(std::move(buf).str());
}

std::vector<SectionInfo> describe_sections(std::string_view bytes) {
    SectionTable table = check_envelope(bytes);
    std::vector<SectionInfo> out;
    out.reserve(kSectionCount);
    for (std::size_t s = 0; s < kSectionCount; ++s)
        out.push_back(SectionInfo{kSectionNames[s], table.offset[s], table.size[s]});
    return out;
}

}  // namespace rlz
