#include "lozi/symbol.hpp"

#include "lozi/error.hpp"

#include <algorithm>

namespace lozi {

char to_char(Sym s) {
    switch (s) {
        case Sym::minus: return '-';
        case Sym::axis: return '0';
        case Sym::plus: return '+';
    }
    throw DomainError("invalid symbol value");
}

Sym sym_from_char(char c) {
    switch (c) {
        case '-': return Sym::minus;
        case '0': return Sym::axis;
        case '+': return Sym::plus;
        default: break;
    }
    throw ParseError(std::string("invalid itinerary symbol '") + c + "'");
}

Sym opposite(Sym s) {
    return static_cast<Sym>(-static_cast<signed char>(s));
}

SymbolWord word_from_string(std::string_view text) {
    SymbolWord w;
    w.reserve(text.size());
    for (char c : text) w.push_back(sym_from_char(c));
    return w;
}

std::string to_string(const SymbolWord& w) {
    std::string s;
    s.reserve(w.size());
    for (Sym x : w) s.push_back(to_char(x));
    return s;
}

bool has_axis(const SymbolWord& w) {
    return std::find(w.begin(), w.end(), Sym::axis) != w.end();
}

Sym ItinWindow::at(long i) const {
    if (i < lo) return Sym::plus;
    if (i > hi()) throw DomainError("itinerary window index beyond recorded horizon");
    return syms[static_cast<std::size_t>(i - lo)];
}

std::string ItinWindow::str() const {
    return to_string(syms);
}

} // namespace lozi
