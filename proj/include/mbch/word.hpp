#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mbch {

enum class Letter : std::uint8_t { X = 0, Y = 1 };

inline char letter_char(Letter l) { return l == Letter::X ? 'X' : 'Y'; }

/// Word over {X, Y} packed into bits (X = 0, Y = 1), first letter in the most
/// significant position, so numeric order on equal lengths is lexicographic.
/// Ordered by (length, bits).
class Word {
public:
    static constexpr int kMaxLength = 62;

    constexpr Word() = default;
    constexpr Word(int length, std::uint64_t bits) : bits_(bits), length_(static_cast<std::uint8_t>(length)) {}

    static Word from_string(std::string_view letters);
    static Word letter(Letter l) { return Word(1, static_cast<std::uint64_t>(l)); }

    [[nodiscard]] constexpr int length() const { return length_; }
    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool empty() const { return length_ == 0; }

    /// Letter at 0-based position k from the left.
    [[nodiscard]] Letter at(int k) const {
        return static_cast<Letter>((bits_ >> (length_ - 1 - k)) & 1U);
    }
    [[nodiscard]] Word prefix(int n) const { return Word(n, bits_ >> (length_ - n)); }
    [[nodiscard]] Word suffix_from(int k) const {
        const int n = length_ - k;
        return Word(n, n == 0 ? 0 : bits_ & ((std::uint64_t{1} << n) - 1));
    }
    [[nodiscard]] int count(Letter l) const;
    [[nodiscard]] std::string to_string() const;

    friend Word operator+(Word a, Word b) {
        return Word(a.length_ + b.length_, (a.bits_ << b.length_) | b.bits_);
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.length_ <=> b.length_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

    /// Dictionary order, where a proper prefix precedes the longer word.
    [[nodiscard]] static bool lex_less(const Word& a, const Word& b);

private:
    std::uint64_t bits_ = 0;
    std::uint8_t length_ = 0;
};

}  // namespace mbch
