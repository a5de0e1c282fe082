#include "pchaos/cantor.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

namespace pchaos {

namespace {

void require_binary(const Address& a) {
    if (a.alphabet() != 2) throw std::invalid_argument("middle-third model needs a binary address");
}

// Sum of 2*bit*3^-(i+1) over the word.
Rational ternary_prefix_value(const Address& a) {
    Rational v = 0;
    Rational place = Rational(1, 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i]) v += 2 * place;
        place /= 3;
    }
    return v;
}

void complement_into(const std::vector<Address>& set, const Address& node, std::vector<Address>& out) {
    bool extended = false;
    for (const auto& s : set) {
        if (s.is_prefix_of(node)) return;
        if (node.is_prefix_of(s)) extended = true;
    }
    if (!extended) {
        out.push_back(node);
        return;
    }
    complement_into(set, node.child(0), out);
    complement_into(set, node.child(1), out);
}

}  // namespace

Region cylinder(const Address& a) {
    require_binary(a);
    const Rational lo = ternary_prefix_value(a);
    return Region(Box(Interval(lo, lo + Rational::pow3(-static_cast<long>(a.size())))));
}

Rational eval_ternary_address(const Address& a, const Tail& tail) {
    require_binary(a);
    const Rational head = ternary_prefix_value(a);
    const Rational scale = Rational::pow3(-static_cast<long>(a.size()));
    Rational tail_value = std::visit(
        [](const auto& t) -> Rational {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, ZerosTail>) {
                return 0;
            } else if constexpr (std::is_same_v<T, OnesTail>) {
                return 1;
            } else {
                require_binary(t.word);
                if (t.word.empty()) throw std::invalid_argument("periodic tail needs a nonempty word");
                // v = block / (1 - 3^-m)
                const auto m = static_cast<long>(t.word.size());
                return ternary_prefix_value(t.word) / (1 - Rational::pow3(-m));
            }
        },
        tail);
    return head + scale * tail_value;
}

std::vector<Address> complement_cylinders(const std::vector<Address>& cylinders) {
    for (const auto& c : cylinders) require_binary(c);
    std::vector<Address> out;
    complement_into(cylinders, Address(), out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pchaos
