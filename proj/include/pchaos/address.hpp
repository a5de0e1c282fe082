#ifndef PCHAOS_ADDRESS_HPP
#define PCHAOS_ADDRESS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pchaos {

/// Finite word over {0, ..., k-1}, k >= 2.
///
/// Names Cantor cylinders, refinement cells and finite prefixes of event
/// sequences. Text form is the digit string ("0101"); the empty word prints
/// as "".
class Address {
public:
    explicit Address(unsigned alphabet = 2);
    Address(std::vector<std::uint8_t> symbols, unsigned alphabet = 2);

    /// Parses a digit string; throws std::invalid_argument on any symbol
    /// outside the alphabet.
    static Address parse(std::string_view text, unsigned alphabet = 2);
    /// The binary word of the given length spelling `value` (most significant
    /// symbol first).
    static Address from_index(std::uint64_t value, std::size_t length);
    /// All binary words of exactly `length` symbols, in lexicographic order.
    static std::vector<Address> all_binary(std::size_t length);

    unsigned alphabet() const { return alphabet_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<std::uint8_t>& symbols() const { return symbols_; }

    Address prefix(std::size_t n) const;
    Address suffix_from(std::size_t start) const;
    Address child(std::uint8_t symbol) const;
    Address concat(const Address& tail) const;
    Address repeat(std::size_t times) const;
    bool is_prefix_of(const Address& other) const;
    /// Shortest word u with this == u^m.
    Address primitive_root() const;
    /// Binary value of the word (most significant symbol first).
    std::uint64_t index() const;

    std::string str() const;

    friend bool operator==(const Address&, const Address&) = default;
    /// Shorter words first, then lexicographic.
    friend std::strong_ordering operator<=>(const Address& a, const Address& b);

private:
    std::vector<std::uint8_t> symbols_;
    unsigned alphabet_ = 2;
};

/// a and b are comparable when one is a prefix of the other (their cylinders
/// meet).
bool comparable(const Address& a, const Address& b);

}  // namespace pchaos

#endif
