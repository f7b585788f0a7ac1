#include "lozi/io.hpp"

#include "lozi/error.hpp"
#include "lozi/version.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace lozi {

namespace {

std::string fmt_double(double v, const char* spec = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string dot_empty(const SymbolWord& w) { return w.empty() ? "." : to_string(w); }

SymbolWord undot(const std::string& s) {
    return s == "." ? SymbolWord{} : word_from_string(s);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

/// Reads the next line, dropping a trailing '\r'; false at end of stream.
bool next_line(std::istream& is, std::string& line) {
    if (!std::getline(is, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

long parse_long(const std::string& tok) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'");
    return v;
}

FileHeader require_header(std::istream& is, const std::string& expected_kind) {
    std::string line;
    if (!next_line(is, line)) throw ParseError("empty input, expected a header line");
    FileHeader h = FileHeader::parse(line);
    if (h.kind != expected_kind) {
        throw ParseError("header kind '" + h.kind + "', expected '" + expected_kind + "'");
    }
    return h;
}

} // namespace

const std::string& FileHeader::get(const std::string& key) const {
    const auto it = fields.find(key);
    if (it == fields.end()) throw DomainError("header field '" + key + "' missing");
    return it->second;
}

long FileHeader::get_long(const std::string& key) const { return parse_long(get(key)); }

std::string FileHeader::render() const {
    std::ostringstream os;
    os << "# lozi " << k_version << " kind=" << kind;
    const char* first[] = {"a", "b", "depth"};
    for (const char* key : first) {
        const auto it = fields.find(key);
        if (it != fields.end()) os << ' ' << key << '=' << it->second;
    }
    for (const auto& [key, value] : fields) {
        if (key == "a" || key == "b" || key == "depth") continue;
        os << ' ' << key << '=' << value;
    }
    return os.str();
}

FileHeader FileHeader::parse(const std::string& line) {
    const std::vector<std::string> toks = split_ws(line);
    if (toks.size() < 3 || toks[0] != "#" || toks[1] != "lozi") {
        throw ParseError("not a header line: '" + line + "'");
    }
    FileHeader h;
    for (std::size_t i = 3; i < toks.size(); ++i) {
        const std::size_t eq = toks[i].find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ParseError("malformed header field '" + toks[i] + "'");
        }
        const std::string key = toks[i].substr(0, eq);
        const std::string value = toks[i].substr(eq + 1);
        if (key == "kind") {
            h.kind = value;
        } else {
            h.fields[key] = value;
        }
    }
    if (h.kind.empty()) throw ParseError("header line carries no kind=");
    return h;
}

FileHeader make_header(std::string kind, const Params& p, int depth) {
    FileHeader h;
    h.kind = std::move(kind);
    h.fields["a"] = p.a().str();
    h.fields["b"] = p.b().str();
    h.fields["depth"] = std::to_string(depth);
    return h;
}

std::string sniff_kind(const std::string& text) {
    const std::size_t nl = text.find('\n');
    std::string line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("# lozi", 0) != 0) return "";
    return FileHeader::parse(line).kind;
}

void write_kneading(std::ostream& os, const KneadingSet& ks, FileHeader h) {
    h.fields["tail"] = std::to_string(ks.tail_len);
    h.fields["alpha_complete"] = std::to_string(ks.alpha_complete_len);
    os << h.render() << '\n';
    os << "n\talpha\ttail\ttruncated\n";
    for (const auto& e : ks.entries) {
        os << e.n << '\t' << dot_empty(e.alpha) << '\t' << dot_empty(e.tail) << '\t'
           << (e.truncated ? 1 : 0) << '\n';
    }
}

KneadingSet read_kneading(std::istream& is, FileHeader* hdr) {
    const FileHeader h = require_header(is, "kneading");
    KneadingSet ks;
    ks.tail_len = static_cast<int>(h.get_long("tail"));
    ks.alpha_complete_len = static_cast<int>(h.get_long("alpha_complete"));

    std::string line;
    while (next_line(is, line)) {
        if (line.empty() || line.rfind("n\t", 0) == 0) continue;
        std::istringstream ls(line);
        std::string n_tok, alpha_tok, tail_tok, trunc_tok;
        if (!(std::getline(ls, n_tok, '\t') && std::getline(ls, alpha_tok, '\t') &&
              std::getline(ls, tail_tok, '\t') && std::getline(ls, trunc_tok))) {
            throw ParseError("malformed kneading row: '" + line + "'");
        }
        KneadingEntry e;
        e.n = parse_long(n_tok);
        e.alpha = undot(alpha_tok);
        e.tail = undot(tail_tok);
        if (trunc_tok != "0" && trunc_tok != "1") {
            throw ParseError("truncated flag must be 0 or 1 in row: '" + line + "'");
        }
        e.truncated = trunc_tok == "1";
        ks.entries.push_back(std::move(e));
    }
    if (ks.entries.empty()) throw ParseError("kneading file has no entries");
    for (std::size_t i = 1; i < ks.entries.size(); ++i) {
        if (ks.entries[i - 1].n >= ks.entries[i].n) {
            throw ParseError("kneading entries out of order at n=" +
                             std::to_string(ks.entries[i].n));
        }
    }
    if (hdr != nullptr) *hdr = h;
    return ks;
}

void write_pattern(std::ostream& os, const FoldingPattern& pat, FileHeader h) {
    os << h.render() << '\n';
    os << pat.render() << '\n';
    os << "slots:";
    for (const auto& s : pat.slots) {
        os << ' ' << (s.kind == 'X' ? std::string("X") : s.label.str());
    }
    os << '\n';
    os << "arrows " << pat.arrow.size() << '\n';
    for (const auto& [from, to] : pat.arrow) {
        os << from << " -> " << to << '\n';
    }
}

FoldingPattern read_pattern(std::istream& is, FileHeader* hdr) {
    const FileHeader h = require_header(is, "pattern");
    FoldingPattern pat;

    std::string render_line;
    if (!next_line(is, render_line) || render_line.empty()) {
        throw ParseError("pattern file misses the rendered line");
    }
    if (render_line.size() % 2 == 0) {
        throw ParseError("rendered pattern must alternate gap and slot symbols");
    }
    for (std::size_t i = 0; i < render_line.size(); ++i) {
        const char c = render_line[i];
        if (i % 2 == 0) {
            const Sym s = sym_from_char(c);
            if (s == Sym::axis) throw ParseError("pattern gaps must be '-' or '+'");
            pat.gaps.push_back(s);
        } else if (c != 'G' && c != 'T' && c != 'X') {
            throw ParseError(std::string("unexpected slot symbol '") + c + "'");
        }
    }

    std::string slots_line;
    if (!next_line(is, slots_line) || slots_line.rfind("slots:", 0) != 0) {
        throw ParseError("pattern file misses the slots: line");
    }
    std::size_t x_count = 0;
    for (const std::string& tok : split_ws(slots_line.substr(6))) {
        FoldingPattern::Slot s;
        if (tok == "X") {
            s.kind = 'X';
            ++x_count;
        } else {
            s.label = Label::parse(tok);
            s.has_label = true;
            s.kind = s.label.kind == Label::Kind::gluing ? 'G' : 'T';
        }
        pat.slots.push_back(s);
    }
    if (x_count != 1) throw ParseError("pattern needs exactly one X slot");
    if (pat.gaps.size() != pat.slots.size() + 1) {
        throw ParseError("rendered line and slots: line disagree on slot count");
    }
    for (std::size_t i = 0; i < pat.slots.size(); ++i) {
        if (render_line[2 * i + 1] != pat.slots[i].kind) {
            throw ParseError("slot kind mismatch at slot " + std::to_string(i));
        }
    }

    std::string arrows_line;
    if (!next_line(is, arrows_line) || arrows_line.rfind("arrows ", 0) != 0) {
        throw ParseError("pattern file misses the arrows line");
    }
    const long n_arrows = parse_long(arrows_line.substr(7));
    for (long k = 0; k < n_arrows; ++k) {
        std::string line;
        if (!next_line(is, line)) throw ParseError("pattern arrow list cut short");
        const std::vector<std::string> toks = split_ws(line);
        if (toks.size() != 3 || toks[1] != "->") {
            throw ParseError("malformed arrow line: '" + line + "'");
        }
        pat.arrow[parse_long(toks[0])] = parse_long(toks[2]);
    }
    pat.x_slot();  // validates presence and anchoring
    (void)pat.slot_of_e(0);
    if (hdr != nullptr) *hdr = h;
    return pat;
}

void write_tree(std::ostream& os, const FoldingTree& t, FileHeader h, bool markers) {
    os << h.render() << '\n';
    const auto edges = t.edges();
    os << "edges " << edges.size() << '\n';
    for (const auto& [u, v] : edges) {
        os << u << " -> " << v << '\n';
    }
    if (markers) {
        const auto rows = tree_markers(t);
        os << "levels " << rows.size() << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            os << "level " << i << ": " << rows[i].str() << '\n';
        }
    }
}

FoldingTree read_tree(std::istream& is, FileHeader* hdr) {
    const FileHeader h = require_header(is, "tree");
    std::string line;
    if (!next_line(is, line) || line.rfind("edges ", 0) != 0) {
        throw ParseError("tree file misses the edges line");
    }
    const long n_edges = parse_long(line.substr(6));
    std::vector<std::pair<long, long>> edges;
    edges.reserve(static_cast<std::size_t>(n_edges));
    for (long k = 0; k < n_edges; ++k) {
        if (!next_line(is, line)) throw ParseError("tree edge list cut short");
        const std::vector<std::string> toks = split_ws(line);
        if (toks.size() != 3 || toks[1] != "->") {
            throw ParseError("malformed edge line: '" + line + "'");
        }
        edges.emplace_back(parse_long(toks[0]), parse_long(toks[2]));
    }
    // Marker rows, when present, are derived data; ignore them.
    FoldingTree t = tree_from_edges(edges);
    if (hdr != nullptr) *hdr = h;
    return t;
}

void write_points(std::ostream& os, const ManifoldWindow& w) {
    os << make_header("points", w.params(), w.depth()).render() << '\n';
    os << "e\tlabel\tx\ty\tx_float\ty_float\n";
    for (long e = w.e_min(); e <= w.e_max(); ++e) {
        const BasicPoint& p = w.point(e);
        os << e << '\t' << p.label.str() << '\t' << p.coords.x.str() << '\t' << p.coords.y.str()
           << '\t' << fmt_double(p.coords.x.to_double()) << '\t'
           << fmt_double(p.coords.y.to_double()) << '\n';
    }
}

void write_arcs(std::ostream& os, const ManifoldWindow& w) {
    os << make_header("arcs", w.params(), w.depth()).render() << '\n';
    os << "e\tcode\tsign\tlevel\tparent\tchildren\n";
    for (long e = w.e_min(); e < w.e_max(); ++e) {
        const BasicArc& a = w.arc(e);
        os << e << '\t' << dot_empty(a.code) << '\t' << to_char(a.sign) << '\t' << a.code.size()
           << '\t' << a.parent_e << '\t';
        const auto kids = w.children(e);
        if (kids) {
            os << kids->first << ".." << kids->second;
        } else {
            os << '?';
        }
        os << '\n';
    }
}

void write_window_svg(std::ostream& os, const ManifoldWindow& w, int width, int height) {
    if (width < 16 || height < 16) throw DomainError("SVG canvas too small");
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (long e = w.e_min(); e <= w.e_max(); ++e) {
        const double x = w.point(e).coords.x.to_double();
        const double y = w.point(e).coords.y.to_double();
        if (first || x < min_x) min_x = x;
        if (first || x > max_x) max_x = x;
        if (first || y < min_y) min_y = y;
        if (first || y > max_y) max_y = y;
        first = false;
    }
    const double pad_x = (max_x - min_x) * 0.05 + 1e-9;
    const double pad_y = (max_y - min_y) * 0.05 + 1e-9;
    min_x -= pad_x;
    max_x += pad_x;
    min_y -= pad_y;
    max_y += pad_y;
    const double sx = width / (max_x - min_x);
    const double sy = height / (max_y - min_y);

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<!-- " << make_header("window-svg", w.params(), w.depth()).render().substr(2)
       << " -->\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (long e = w.e_min(); e <= w.e_max(); ++e) {
        const double x = (w.point(e).coords.x.to_double() - min_x) * sx;
        const double y = height - (w.point(e).coords.y.to_double() - min_y) * sy;
        if (e != w.e_min()) os << ' ';
        os << fmt_double(x, "%.3f") << ',' << fmt_double(y, "%.3f");
    }
    os << "\"/>\n</svg>\n";
}

void write_report(std::ostream& os, const VerificationReport& r) { os << r.str() << '\n'; }

} // namespace lozi
