#ifndef PCHAOS_FINITE_TOPOLOGY_HPP
#define PCHAOS_FINITE_TOPOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pchaos/check_report.hpp"

namespace pchaos {

/// Subset of a finite point set; bit i is point i.
using Mask = std::uint64_t;

inline constexpr std::size_t max_finite_points = 16;

inline Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// True iff `family` contains the empty set and all n points and is closed
/// under pairwise union and intersection.
bool is_topology(std::size_t n, const std::vector<Mask>& family);

/// Finite topological space with labelled points. The open family is
/// validated on construction (std::invalid_argument if it is not a topology).
class FiniteTopSpace {
public:
    FiniteTopSpace(std::vector<std::string> labels, std::vector<Mask> opens);

    static FiniteTopSpace discrete(std::size_t n);
    static FiniteTopSpace indiscrete(std::size_t n);
    /// Opens {}, {p0}, {p0,p1}, ..., all points.
    static FiniteTopSpace chain(std::size_t n);
    static FiniteTopSpace sierpinski() { return chain(2); }
    /// Built-in names: chain3, sierpinski, discreteN, indiscreteN, chainN.
    static FiniteTopSpace named(std::string_view name);
    /// Labels a, b, c, ... for n points.
    static std::vector<std::string> letter_labels(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    Mask full() const { return full_mask(size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Opens in increasing mask order.
    const std::vector<Mask>& opens() const { return opens_; }
    bool is_open(Mask m) const;
    std::size_t index_of(std::string_view label) const;
    /// Mask of a label string such as "ab" (single-character labels).
    Mask mask_of(std::string_view letters) const;
    std::string label_set(Mask m) const;

    bool is_discrete() const;
    bool is_t0() const;
    bool is_t1() const;
    /// For finite spaces Hausdorff, T1 and discrete coincide.
    bool is_hausdorff() const { return is_t1(); }

private:
    std::vector<std::string> labels_;
    std::vector<Mask> opens_;
};

/// Subspace topology on the points of `sel`, in increasing index order.
FiniteTopSpace subspace(const FiniteTopSpace& x, Mask sel);

/// Blocks are nonempty, pairwise disjoint and cover the points; held in
/// order of their smallest member.
class Partition {
public:
    Partition(std::size_t n, std::vector<Mask> blocks);
    /// Parses "ab|c" against a space's single-letter labels.
    static Partition parse(const FiniteTopSpace& x, std::string_view text);
    static Partition singletons(std::size_t n);

    std::size_t points() const { return n_; }
    const std::vector<Mask>& blocks() const { return blocks_; }
    std::size_t block_of(std::size_t point) const;

private:
    std::size_t n_;
    std::vector<Mask> blocks_;
};

/// Total map between finite spaces, given as image index per domain point.
class FiniteMap {
public:
    FiniteMap(FiniteTopSpace domain, FiniteTopSpace codomain, std::vector<std::size_t> image);

    const FiniteTopSpace& domain() const { return domain_; }
    const FiniteTopSpace& codomain() const { return codomain_; }
    const std::vector<std::size_t>& image() const { return image_; }
    std::size_t operator()(std::size_t p) const { return image_[p]; }
    Mask preimage(Mask target) const;
    bool is_bijective() const;
    bool is_surjective() const;
    /// Inverse of a bijection; throws std::logic_error otherwise.
    FiniteMap inverse() const;

private:
    FiniteTopSpace domain_;
    FiniteTopSpace codomain_;
    std::vector<std::size_t> image_;
};

/// Quotient of X by D: points are D's blocks (labels concatenated), opens are
/// the block families whose union is open in X.
FiniteTopSpace decomposition_topology(const FiniteTopSpace& x, const Partition& d);

bool is_continuous(const FiniteMap& f);
bool is_homeomorphism(const FiniteMap& f);

/// Outcome of a hypothesis-guarded verification. When the hypotheses fail
/// the check still runs; `holds` is then informational.
struct Verification {
    bool holds = false;
    bool hypotheses_met = false;
    std::string note;
};

/// Builds the representative subspace {reps[i]} and tests x_i -> block i for
/// being a homeomorphism onto the decomposition space. `reps[i]` must lie in
/// block i (std::invalid_argument otherwise). Hypothesis: X Hausdorff.
Verification verify_prop5(const FiniteTopSpace& x, const Partition& d, const std::vector<std::size_t>& reps);

/// Nonempty fibers f^-1(y) in codomain order; std::invalid_argument if f is
/// not onto.
Partition fiber_partition(const FiniteMap& f);

/// Tests f^-1(y) -> y for being a homeomorphism from the fiber quotient onto
/// the codomain. Hypotheses: f continuous, codomain Hausdorff. f must be onto.
Verification verify_lemma7(const FiniteMap& f);

/// Every topology on n labelled points (n <= 5), via preorders: the opens
/// are the up-sets of each reflexive transitive relation.
std::vector<FiniteTopSpace> all_topologies(std::size_t n);
/// Every partition of n points (restricted growth strings).
std::vector<Partition> all_partitions(std::size_t n);

/// Exhaustive suites. Each returns one aggregated check per suite with the
/// instance count (or the first counterexample) as witness.
CheckReport sweep_decomposition(std::size_t n);
CheckReport sweep_prop5(std::size_t max_points);
CheckReport sweep_lemma7(std::size_t max_domain, std::size_t max_codomain);

}  // namespace pchaos

#endif
