#pragma once

#include "lozi/manifold.hpp"
#include "lozi/oracle.hpp"
#include "lozi/symbolic.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace lozi {

/// First line of every text artifact:
///   # lozi <version> kind=<kind> a=<a> b=<b> depth=<d> [extras]
/// Values are exact rational strings, so a written file pins down the
/// computation that produced it and converters can recompute the context.
struct FileHeader {
    std::string kind;
    std::map<std::string, std::string> fields;

    bool has(const std::string& key) const { return fields.count(key) != 0; }
    /// Field lookup; throws DomainError naming the key when missing.
    const std::string& get(const std::string& key) const;
    long get_long(const std::string& key) const;

    std::string render() const;
    /// Parses a header line (must start with "# lozi"); ParseError otherwise.
    static FileHeader parse(const std::string& line);
};

FileHeader make_header(std::string kind, const Params& p, int depth);

void write_kneading(std::ostream& os, const KneadingSet& ks, FileHeader h);
void write_pattern(std::ostream& os, const FoldingPattern& pat, FileHeader h);
void write_tree(std::ostream& os, const FoldingTree& t, FileHeader h, bool markers = true);
void write_points(std::ostream& os, const ManifoldWindow& w);
void write_arcs(std::ostream& os, const ManifoldWindow& w);
/// The window polyline as a standalone SVG, y axis pointing up.
void write_window_svg(std::ostream& os, const ManifoldWindow& w, int width, int height);
void write_report(std::ostream& os, const VerificationReport& r);

/// kind= of the leading header line, or "" when the text has none.
std::string sniff_kind(const std::string& text);

/// Readers accept exactly what the writers produce. The header is
/// mandatory; it is returned through hdr when requested.
KneadingSet read_kneading(std::istream& is, FileHeader* hdr = nullptr);
FoldingPattern read_pattern(std::istream& is, FileHeader* hdr = nullptr);
FoldingTree read_tree(std::istream& is, FileHeader* hdr = nullptr);

} // namespace lozi
