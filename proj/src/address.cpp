#include "pchaos/address.hpp"

#include <stdexcept>

namespace pchaos {

Address::Address(unsigned alphabet) : alphabet_(alphabet) {
    if (alphabet < 2 || alphabet > 10) throw std::invalid_argument("address alphabet must be 2..10");
}

Address::Address(std::vector<std::uint8_t> symbols, unsigned alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
    if (alphabet < 2 || alphabet > 10) throw std::invalid_argument("address alphabet must be 2..10");
    for (auto s : symbols_) {
        if (s >= alphabet_) throw std::invalid_argument("address symbol outside alphabet");
    }
}

Address Address::parse(std::string_view text, unsigned alphabet) {
    std::vector<std::uint8_t> syms;
    syms.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') >= alphabet)
            throw std::invalid_argument("bad address symbol '" + std::string(1, c) + "' in '" +
                                        std::string(text) + "'");
        syms.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Address(std::move(syms), alphabet);
}

Address Address::from_index(std::uint64_t value, std::size_t length) {
    std::vector<std::uint8_t> syms(length);
    for (std::size_t i = 0; i < length; ++i)
        syms[length - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1U);
    return Address(std::move(syms));
}

std::vector<Address> Address::all_binary(std::size_t length) {
    std::vector<Address> out;
    out.reserve(std::size_t{1} << length);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << length); ++v) out.push_back(from_index(v, length));
    return out;
}

Address Address::prefix(std::size_t n) const {
    if (n > size()) throw std::out_of_range("address prefix longer than address");
    return Address({symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(n)}, alphabet_);
}

Address Address::suffix_from(std::size_t start) const {
    if (start > size()) throw std::out_of_range("address suffix start past end");
    return Address({symbols_.begin() + static_cast<std::ptrdiff_t>(start), symbols_.end()}, alphabet_);
}

Address Address::child(std::uint8_t symbol) const {
    auto syms = symbols_;
    syms.push_back(symbol);
    return Address(std::move(syms), alphabet_);
}

Address Address::concat(const Address& tail) const {
    if (tail.alphabet_ != alphabet_) throw std::invalid_argument("concat: alphabet mismatch");
    auto syms = symbols_;
    syms.insert(syms.end(), tail.symbols_.begin(), tail.symbols_.end());
    return Address(std::move(syms), alphabet_);
}

Address Address::repeat(std::size_t times) const {
    std::vector<std::uint8_t> syms;
    syms.reserve(size() * times);
    for (std::size_t i = 0; i < times; ++i) syms.insert(syms.end(), symbols_.begin(), symbols_.end());
    return Address(std::move(syms), alphabet_);
}

bool Address::is_prefix_of(const Address& other) const {
    if (size() > other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
        if (symbols_[i] != other.symbols_[i]) return false;
    }
    return true;
}

Address Address::primitive_root() const {
    const std::size_t n = size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) periodic = symbols_[i] == symbols_[i - p];
        if (periodic) return prefix(p);
    }
    return *this;
}

std::uint64_t Address::index() const {
    if (size() > 64) throw std::overflow_error("address too long for index()");
    std::uint64_t v = 0;
    for (auto s : symbols_) v = v * alphabet_ + s;
    return v;
}

std::string Address::str() const {
    std::string s;
    s.reserve(size());
    for (auto c : symbols_) s.push_back(static_cast<char>('0' + c));
    return s;
}

std::strong_ordering operator<=>(const Address& a, const Address& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.symbols_ <=> b.symbols_;
}

bool comparable(const Address& a, const Address& b) { return a.is_prefix_of(b) || b.is_prefix_of(a); }

}  // namespace pchaos
