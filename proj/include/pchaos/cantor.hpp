#ifndef PCHAOS_CANTOR_HPP
#define PCHAOS_CANTOR_HPP

#include <variant>
#include <vector>

#include "pchaos/address.hpp"
#include "pchaos/geometry.hpp"
#include "pchaos/rational.hpp"

namespace pchaos {

// Middle-third Cantor model. Bit 0 selects the left third, bit 1 the right.

/// Closed interval of the middle-third construction named by a binary
/// address; length 3^-|a|.
Region cylinder(const Address& a);

struct ZerosTail {};
struct OnesTail {};
/// Tail that repeats `word` forever.
struct PeriodicTail {
    Address word;
};
using Tail = std::variant<ZerosTail, OnesTail, PeriodicTail>;

/// Exact point of the middle-third set with ternary digits 2*bit along a,
/// followed by the given constant or periodic tail.
Rational eval_ternary_address(const Address& a, const Tail& tail);

/// Cylinder addresses covering the complement of the union of the given
/// cylinders, in shortlex order. Empty when the input already covers.
std::vector<Address> complement_cylinders(const std::vector<Address>& cylinders);

}  // namespace pchaos

#endif
