#include "mbch/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mbch {

Word Word::from_string(std::string_view letters) {
    if (static_cast<int>(letters.size()) > kMaxLength) throw std::invalid_argument("word too long");
    std::uint64_t bits = 0;
    for (char c : letters) {
        bits <<= 1;
        if (c == 'Y') {
            bits |= 1U;
        } else if (c != 'X') {
            throw std::invalid_argument(std::string("word letters must be X or Y, got '") + c + "'");
        }
    }
    return Word(static_cast<int>(letters.size()), bits);
}

int Word::count(Letter l) const {
    const int ys = std::popcount(bits_);
    return l == Letter::Y ? ys : length_ - ys;
}

std::string Word::to_string() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(length_));
    for (int k = 0; k < length_; ++k) out.push_back(letter_char(at(k)));
    return out;
}

bool Word::lex_less(const Word& a, const Word& b) {
    const int n = std::min(a.length(), b.length());
    const std::uint64_t pa = a.prefix(n).bits();
    const std::uint64_t pb = b.prefix(n).bits();
    if (pa != pb) return pa < pb;
    return a.length() < b.length();
}

}  // namespace mbch
