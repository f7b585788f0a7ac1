#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lozi {

/// One symbol of an itinerary: the sign of the x coordinate of an orbit
/// point. `axis` marks an exact hit of the switching line x = 0; itineraries
/// containing it are boundary cases most predicates refuse.
enum class Sym : signed char {
    minus = -1,
    axis = 0,
    plus = 1,
};

char to_char(Sym s);
Sym sym_from_char(char c);
Sym opposite(Sym s);

using SymbolWord = std::vector<Sym>;

/// Parses a word over {'-', '0', '+'}; throws ParseError on anything else.
SymbolWord word_from_string(std::string_view text);
std::string to_string(const SymbolWord& w);
bool has_axis(const SymbolWord& w);

/// A finite two-sided window of an itinerary: symbols for indices
/// lo .. lo + size - 1, with every index below lo implicitly '+'.
/// This encodes points on the unstable manifold of the fixed point with
/// positive coordinates, whose backward itineraries end in all '+'.
struct ItinWindow {
    long lo = 1;
    SymbolWord syms;

    long hi() const { return lo + static_cast<long>(syms.size()) - 1; }
    /// Symbol at index i; requires i <= hi().
    Sym at(long i) const;
    std::string str() const;
};

} // namespace lozi
