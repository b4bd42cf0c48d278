#include "rlz/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rlz/errors.hpp"
#include "rlz/index.hpp"
#include "rlz/io.hpp"

namespace rlz {

namespace {

const char* kind_name(HitKind k) {
    switch (k) {
        case HitKind::ref: return "ref";
        case HitKind::primary: return "primary";
        default: return "secondary";
    }
}

std::vector<std::string> read_patterns(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::string> patterns;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) patterns.push_back(line);
    }
    return patterns;
}

Sequence concatenated_reference(const std::vector<NamedSequence>& records) {
    Sequence ref;
    for (const NamedSequence& rec : records) ref.append(rec.seq);
    return ref;
}

void augment_reference(Sequence& ref, const std::vector<Sequence>& docs, std::ostream& err) {
    bool present[256] = {};
    for (unsigned char c : ref) present[c] = true;
    std::set<unsigned char> missing;
    for (const Sequence& doc : docs)
        for (unsigned char c : doc)
            if (!present[c]) missing.insert(c);
    for (unsigned char c : missing) {  // ascending symbol order
        ref.push_back(static_cast<char>(c));
        char buf[64];
        if (std::isprint(c))
            std::snprintf(buf, sizeof buf, "augmented reference with symbol '%c' (0x%02X)", c, c);
        else
            std::snprintf(buf, sizeof buf, "augmented reference with symbol 0x%02X", c);
        err << buf << "\n";
    }
}

int do_build(const std::string& ref_path, const std::vector<std::string>& text_paths,
             InputFormat format, const std::string& out_path, bool augment, std::ostream& out,
             std::ostream& err) {
    Sequence ref;
    if (format == InputFormat::fasta)
        ref = concatenated_reference(ingest({ref_path}, format));
    else
        ref = ingest({ref_path}, format).front().seq;

    std::vector<Sequence> docs;
    for (NamedSequence& rec : ingest(text_paths, format)) docs.push_back(std::move(rec.seq));

    if (augment) augment_reference(ref, docs, err);

    RlzIndex index(std::move(ref), docs);
    save(index, out_path);
    out << "wrote " << out_path << " (n=" << index.reference().size()
        << " N=" << index.parse().total_len << " r=" << index.parse().phrase_count()
        << " d=" << index.dict().size() << ")\n";
    return 0;
}

void print_hits_tsv(const std::string& pattern, const QueryResult& res, std::ostream& out) {
    for (std::uint64_t pos : res.ref_hits)
        out << pattern << "\tG:" << pos << "\tref\n";
    for (const ClassifiedHit& h : res.text_hits)
        out << pattern << "\t" << h.doc << ":" << h.offset << "\t" << kind_name(h.kind) << "\n";
}

int do_query(const std::string& index_path, const std::vector<std::string>& patterns,
             bool count_only, bool as_json, std::ostream& out) {
    RlzIndex index = load(index_path);
    nlohmann::json report = nlohmann::json::array();
    for (const std::string& pattern : patterns) {
        QueryResult res = index.locate(pattern);
        if (as_json) {
            nlohmann::json entry;
            entry["pattern"] = pattern;
            entry["counts"] = {{"ref", res.ref_count},
                               {"primary", res.primary_count},
                               {"secondary", res.secondary_count}};
            if (!count_only) {
                entry["ref_positions"] = res.ref_hits;
                nlohmann::json hits = nlohmann::json::array();
                for (const ClassifiedHit& h : res.text_hits)
                    hits.push_back({{"doc", h.doc},
                                    {"offset", h.offset},
                                    {"kind", kind_name(h.kind)}});
                entry["hits"] = std::move(hits);
            }
            report.push_back(std::move(entry));
        } else if (count_only) {
            out << pattern << "\t" << res.ref_count << "\t" << res.primary_count << "\t"
                << res.secondary_count << "\n";
        } else {
            print_hits_tsv(pattern, res, out);
        }
    }
    if (as_json) out << report.dump(2) << "\n";
    return 0;
}

int do_extract(const std::string& index_path, std::uint64_t doc, std::uint64_t start,
               std::uint64_t len, std::ostream& out) {
    RlzIndex index = load(index_path);
    out << index.extract(doc, start, len) << "\n";
    return 0;
}

int do_stats(const std::string& index_path, std::ostream& out) {
    std::ifstream in(index_path, std::ios::binary);
    if (!in) throw IoError("cannot open " + index_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + index_path);
    std::string bytes = std::move(buf).str();

    RlzIndex index = deserialize(bytes);
    const Parse& parse = index.parse();
    out << "n=" << index.reference().size() << " N=" << parse.total_len
        << " r=" << parse.phrase_count() << " d=" << index.dict().size() << "\n";
    out << "docs=" << parse.doc_count() << " sigma=" << index.reference().sigma() << "\n";

    std::uint64_t nonref = 0;
    for (const SectionInfo& sec : describe_sections(bytes)) {
        out << "section " << sec.name << " " << sec.size << "\n";
        if (sec.name != "reference" && sec.name != "suffix_lcp") nonref += sec.size;
    }
    out << "total_bytes " << bytes.size() << "\n";
    out << "nonreference_bytes " << nonref << "\n";

    std::uint64_t mn = 0, mx = 0, sum = 0;
    for (const Phrase& ph : parse.phrases) {
        mn = mn == 0 ? ph.len : std::min(mn, ph.len);
        mx = std::max(mx, ph.len);
        sum += ph.len;
    }
    double mean = parse.phrase_count() ? static_cast<double>(sum) / parse.phrase_count() : 0.0;
    char buf2[96];
    std::snprintf(buf2, sizeof buf2, "phrase_len min=%llu mean=%.2f max=%llu",
                  static_cast<unsigned long long>(mn), mean,
                  static_cast<unsigned long long>(mx));
    out << buf2 << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reference-relative compressed text index"};
    app.require_subcommand(1);

    std::string ref_path, out_path, index_path, pattern, patterns_path, format_name = "fasta";
    std::vector<std::string> text_paths;
    bool augment = false, count_only = false, as_json = false;
    std::uint64_t doc = 0, start = 0, len = 0;

    CLI::App* build = app.add_subcommand("build", "Build an index from reference and texts");
    build->add_option("--ref", ref_path, "Reference sequence file")->required();
    build->add_option("--text", text_paths, "Document file(s)");
    build->add_option("--format", format_name, "Input format: fasta or raw")
        ->check(CLI::IsMember({"fasta", "raw"}));
    build->add_option("--out", out_path, "Output index path")->required();
    build->add_flag("--augment-reference", augment,
                    "Append missing collection symbols to the reference");

    CLI::App* query = app.add_subcommand("query", "Locate patterns in an index");
    query->add_option("--index", index_path, "Index file")->required();
    CLI::Option* opt_p = query->add_option("--pattern", pattern, "Pattern string");
    CLI::Option* opt_pf = query->add_option("--patterns", patterns_path, "File of patterns");
    opt_p->excludes(opt_pf);
    query->add_flag("--count-only", count_only, "Print occurrence counts only");
    query->add_flag("--json", as_json, "JSON output");

    CLI::App* extract = app.add_subcommand("extract", "Extract a document substring");
    extract->add_option("--index", index_path, "Index file")->required();
    extract->add_option("--doc", doc, "Document id (1-based)")->required();
    extract->add_option("--start", start, "Start offset (1-based)")->required();
    extract->add_option("--len", len, "Length")->required();

    CLI::App* stats = app.add_subcommand("stats", "Print index statistics");
    stats->add_option("--index", index_path, "Index file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (build->parsed()) {
            InputFormat format = format_name == "raw" ? InputFormat::raw : InputFormat::fasta;
            return do_build(ref_path, text_paths, format, out_path, augment, out, err);
        }
        if (query->parsed()) {
            if (opt_p->count() == 0 && opt_pf->count() == 0) {
                err << "usage error: one of --pattern/--patterns is required\n";
                return 1;
            }
            std::vector<std::string> patterns;
            if (opt_p->count())
                patterns.push_back(pattern);
            else
                patterns = read_patterns(patterns_path);
            return do_query(index_path, patterns, count_only, as_json, out);
        }
        if (extract->parsed()) return do_extract(index_path, doc, start, len, out);
        if (stats->parsed()) return do_stats(index_path, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 1;
}

}  // namespace rlz
