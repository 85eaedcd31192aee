#include "mbch/assoc.hpp"

#include "mbch/errors.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace mbch {

NCSeries::NCSeries(int truncation) : truncation_(truncation) {
    if (truncation < 0) throw std::invalid_argument("NCSeries: negative truncation");
    if (truncation > Word::kMaxLength) throw std::invalid_argument("NCSeries: truncation too large");
}

NCSeries NCSeries::monomial(Word w, const Rational& c, int truncation) {
    NCSeries s(truncation);
    s.add_term(w, c);
    return s;
}

Rational NCSeries::constant_term() const {
    auto it = terms_.find(Word());
    return it == terms_.end() ? Rational() : it->second;
}

NCSeries NCSeries::component(int d) const {
    NCSeries out(truncation_);
    auto it = terms_.lower_bound(Word(d, 0));
    for (; it != terms_.end() && it->first.length() == d; ++it) out.terms_.emplace_hint(out.terms_.end(), *it);
    return out;
}

NCSeries NCSeries::truncated(int n) const {
    NCSeries out(std::min(n, truncation_));
    for (const auto& [w, c] : terms_) {
        if (w.length() > out.truncation_) break;
        out.terms_.emplace_hint(out.terms_.end(), w, c);
    }
    return out;
}

void NCSeries::add_term(Word w, const Rational& c) {
    if (w.length() > truncation_ || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCSeries& NCSeries::operator+=(const NCSeries& o) {
    if (o.truncation_ < truncation_) *this = truncated(o.truncation_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCSeries& NCSeries::operator-=(const NCSeries& o) {
    if (o.truncation_ < truncation_) *this = truncated(o.truncation_);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCSeries& NCSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

NCSeries operator*(const NCSeries& a, const NCSeries& b) {
    const int n = std::min(a.truncation(), b.truncation());
    // Dense accumulator per output length, indexed by the packed word bits.
    std::vector<std::vector<Rational>> acc(static_cast<std::size_t>(n + 1));
    for (const auto& [wa, ca] : a.terms()) {
        if (wa.length() > n) break;
        for (const auto& [wb, cb] : b.terms()) {
            const int len = wa.length() + wb.length();
            if (len > n) break;
            auto& slot = acc[static_cast<std::size_t>(len)];
            if (slot.empty()) slot.resize(std::size_t{1} << len);
            slot[(wa + wb).bits()].add_product(ca, cb);
        }
    }
    NCSeries out(n);
    for (int len = 0; len <= n; ++len) {
        const auto& slot = acc[static_cast<std::size_t>(len)];
        for (std::size_t bits = 0; bits < slot.size(); ++bits) {
            if (!slot[bits].is_zero()) out.add_term(Word(len, bits), slot[bits]);
        }
    }
    return out;
}

bool NCSeries::equal_through(const NCSeries& o, int n) const {
    return truncated(n).terms_ == o.truncated(n).terms_;
}

std::string NCSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (w.empty()) {
            os << mag;
        } else if (mag == Rational(1)) {
            os << w.to_string();
        } else {
            os << mag << "*" << w.to_string();
        }
    }
    return os.str();
}

NCSeries nc_mul(const NCSeries& a, const NCSeries& b) { return a * b; }

NCSeries nc_exp(const NCSeries& a) {
    if (!a.constant_term().is_zero()) throw DomainError("nonzero constant term");
    const int n = a.truncation();
    NCSeries result = NCSeries::one(n);
    NCSeries power = NCSeries::one(n);
    for (int k = 1; k <= n; ++k) {
        power = power * a;
        power *= Rational(1, k);
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

NCSeries nc_log(const NCSeries& a) {
    if (a.constant_term() != Rational(1)) throw DomainError("constant term must be 1");
    const int n = a.truncation();
    const NCSeries x = a - NCSeries::one(n);
    NCSeries result(n);
    NCSeries power = NCSeries::one(n);
    for (int k = 1; k <= n; ++k) {
        power = power * x;
        if (power.is_zero()) break;
        result += power * Rational(k % 2 == 1 ? 1 : -1, k);
    }
    return result;
}

NCSeries bch_log_oracle(int truncation) {
    if (truncation < 1) throw std::invalid_argument("bch_log_oracle: truncation must be >= 1");
    const NCSeries ex = nc_exp(NCSeries::generator(Letter::X, truncation));
    const NCSeries ey = nc_exp(NCSeries::generator(Letter::Y, truncation));
    return nc_log(ex * ey);
}

Rational nc_coefficient(const NCSeries& a, Word w) {
    if (w.length() > a.truncation()) throw DomainError("word beyond truncation");
    auto it = a.terms().find(w);
    return it == a.terms().end() ? Rational() : it->second;
}

NCSeries nc_negswap(const NCSeries& a) {
    NCSeries out(a.truncation());
    for (const auto& [w, c] : a.terms()) {
        const std::uint64_t mask = w.length() == 0 ? 0 : ((std::uint64_t{1} << w.length()) - 1);
        out.add_term(Word(w.length(), ~w.bits() & mask), w.length() % 2 == 0 ? c : -c);
    }
    return out;
}

}  // namespace mbch
