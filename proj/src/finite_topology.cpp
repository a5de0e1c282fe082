#include "pchaos/finite_topology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pchaos {

namespace {

bool has_bit(Mask m, std::size_t i) { return (m >> i) & 1U; }

// Re-index the bits of m selected by sel onto 0..popcount(sel)-1.
Mask compress(Mask m, Mask sel) {
    Mask out = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; sel >> i; ++i) {
        if (!has_bit(sel, i)) continue;
        if (has_bit(m, i)) out |= Mask{1} << k;
        ++k;
    }
    return out;
}

std::vector<Mask> dedup_sorted(std::vector<Mask> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

bool is_topology(std::size_t n, const std::vector<Mask>& family) {
    if (n > max_finite_points) return false;
    const Mask full = full_mask(n);
    const auto f = dedup_sorted(family);
    auto member = [&](Mask m) { return std::binary_search(f.begin(), f.end(), m); };
    if (!member(0) || !member(full)) return false;
    for (Mask m : f) {
        if (m & ~full) return false;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (!member(f[i] | f[j]) || !member(f[i] & f[j])) return false;
        }
    }
    return true;
}

FiniteTopSpace::FiniteTopSpace(std::vector<std::string> labels, std::vector<Mask> opens)
    : labels_(std::move(labels)), opens_(dedup_sorted(std::move(opens))) {
    if (labels_.empty()) throw std::invalid_argument("finite space needs at least one point");
    if (labels_.size() > max_finite_points) throw std::invalid_argument("finite space too large");
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate point label");
    if (!is_topology(labels_.size(), opens_)) throw std::invalid_argument("open family is not a topology");
}

std::vector<std::string> FiniteTopSpace::letter_labels(std::size_t n) {
    if (n > 26) throw std::invalid_argument("too many points for letter labels");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
    return out;
}

FiniteTopSpace FiniteTopSpace::discrete(std::size_t n) {
    std::vector<Mask> opens;
    for (Mask m = 0; m <= full_mask(n); ++m) opens.push_back(m);
    return FiniteTopSpace(letter_labels(n), std::move(opens));
}

FiniteTopSpace FiniteTopSpace::indiscrete(std::size_t n) {
    return FiniteTopSpace(letter_labels(n), {0, full_mask(n)});
}

FiniteTopSpace FiniteTopSpace::chain(std::size_t n) {
    std::vector<Mask> opens;
    for (std::size_t k = 0; k <= n; ++k) opens.push_back(full_mask(k));
    return FiniteTopSpace(letter_labels(n), std::move(opens));
}

FiniteTopSpace FiniteTopSpace::named(std::string_view name) {
    auto sized = [&](std::string_view prefix) -> std::size_t {
        const auto rest = name.substr(prefix.size());
        if (rest.empty() || rest.size() > 2 || !std::all_of(rest.begin(), rest.end(), [](char c) {
                return c >= '0' && c <= '9';
            }))
            throw std::invalid_argument("bad space name '" + std::string(name) + "'");
        const std::size_t n = std::stoul(std::string(rest));
        if (n < 1 || n > 8) throw std::invalid_argument("named spaces have 1..8 points");
        return n;
    };
    if (name == "sierpinski") return sierpinski();
    if (name.starts_with("discrete")) return discrete(sized("discrete"));
    if (name.starts_with("indiscrete")) return indiscrete(sized("indiscrete"));
    if (name.starts_with("chain")) return chain(sized("chain"));
    throw std::invalid_argument("unknown space '" + std::string(name) + "'");
}

bool FiniteTopSpace::is_open(Mask m) const { return std::binary_search(opens_.begin(), opens_.end(), m); }

std::size_t FiniteTopSpace::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    throw std::invalid_argument("unknown point '" + std::string(label) + "'");
}

Mask FiniteTopSpace::mask_of(std::string_view letters) const {
    Mask m = 0;
    for (char c : letters) {
        const Mask bit = Mask{1} << index_of(std::string(1, c));
        if (m & bit) throw std::invalid_argument("point '" + std::string(1, c) + "' repeated");
        m |= bit;
    }
    return m;
}

std::string FiniteTopSpace::label_set(Mask m) const {
    std::string s;
    for (std::size_t i = 0; i < size(); ++i) {
        if (has_bit(m, i)) s += labels_[i];
    }
    return s;
}

bool FiniteTopSpace::is_discrete() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (!is_open(Mask{1} << i)) return false;
    }
    return true;
}

bool FiniteTopSpace::is_t0() const {
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            const bool split = std::any_of(opens_.begin(), opens_.end(),
                                           [&](Mask u) { return has_bit(u, i) != has_bit(u, j); });
            if (!split) return false;
        }
    }
    return true;
}

bool FiniteTopSpace::is_t1() const {
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            if (i == j) continue;
            const bool sep = std::any_of(opens_.begin(), opens_.end(),
                                         [&](Mask u) { return has_bit(u, i) && !has_bit(u, j); });
            if (!sep) return false;
        }
    }
    return true;
}

FiniteTopSpace subspace(const FiniteTopSpace& x, Mask sel) {
    if (sel == 0 || (sel & ~x.full())) throw std::invalid_argument("subspace selection out of range");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (has_bit(sel, i)) labels.push_back(x.labels()[i]);
    }
    std::vector<Mask> opens;
    for (Mask u : x.opens()) opens.push_back(compress(u & sel, sel));
    return FiniteTopSpace(std::move(labels), std::move(opens));
}

Partition::Partition(std::size_t n, std::vector<Mask> blocks) : n_(n), blocks_(std::move(blocks)) {
    Mask seen = 0;
    for (Mask b : blocks_) {
        if (b == 0) throw std::invalid_argument("partition block is empty");
        if (b & ~full_mask(n)) throw std::invalid_argument("partition block outside the space");
        if (b & seen) throw std::invalid_argument("partition blocks overlap");
        seen |= b;
    }
    if (seen != full_mask(n)) throw std::invalid_argument("partition blocks do not cover the space");
    std::sort(blocks_.begin(), blocks_.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

Partition Partition::parse(const FiniteTopSpace& x, std::string_view text) {
    std::vector<Mask> blocks;
    std::size_t start = 0;
    while (true) {
        const auto bar = text.find('|', start);
        blocks.push_back(x.mask_of(text.substr(start, bar == std::string_view::npos ? text.npos : bar - start)));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return Partition(x.size(), std::move(blocks));
}

Partition Partition::singletons(std::size_t n) {
    std::vector<Mask> blocks;
    for (std::size_t i = 0; i < n; ++i) blocks.push_back(Mask{1} << i);
    return Partition(n, std::move(blocks));
}

std::size_t Partition::block_of(std::size_t point) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (has_bit(blocks_[i], point)) return i;
    }
    throw std::out_of_range("point outside partition");
}

FiniteMap::FiniteMap(FiniteTopSpace domain, FiniteTopSpace codomain, std::vector<std::size_t> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
    if (image_.size() != domain_.size()) throw std::invalid_argument("map is not total on its domain");
    for (auto y : image_) {
        if (y >= codomain_.size()) throw std::invalid_argument("map value outside codomain");
    }
}

Mask FiniteMap::preimage(Mask target) const {
    Mask m = 0;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (has_bit(target, image_[i])) m |= Mask{1} << i;
    }
    return m;
}

bool FiniteMap::is_surjective() const {
    Mask hit = 0;
    for (auto y : image_) hit |= Mask{1} << y;
    return hit == codomain_.full();
}

bool FiniteMap::is_bijective() const { return domain_.size() == codomain_.size() && is_surjective(); }

FiniteMap FiniteMap::inverse() const {
    if (!is_bijective()) throw std::logic_error("inverse of a non-bijective map");
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return FiniteMap(codomain_, domain_, std::move(inv));
}

FiniteTopSpace decomposition_topology(const FiniteTopSpace& x, const Partition& d) {
    if (d.points() != x.size()) throw std::invalid_argument("partition does not match the space");
    const auto& blocks = d.blocks();
    std::vector<std::string> labels;
    for (Mask b : blocks) labels.push_back(x.label_set(b));
    std::vector<Mask> opens;
    for (Mask fam = 0; fam <= full_mask(blocks.size()); ++fam) {
        Mask u = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (has_bit(fam, i)) u |= blocks[i];
        }
        if (x.is_open(u)) opens.push_back(fam);
    }
    return FiniteTopSpace(std::move(labels), std::move(opens));
}

bool is_continuous(const FiniteMap& f) {
    return std::all_of(f.codomain().opens().begin(), f.codomain().opens().end(),
                       [&](Mask u) { return f.domain().is_open(f.preimage(u)); });
}

bool is_homeomorphism(const FiniteMap& f) {
    return f.is_bijective() && is_continuous(f) && is_continuous(f.inverse());
}

Verification verify_prop5(const FiniteTopSpace& x, const Partition& d, const std::vector<std::size_t>& reps) {
    if (reps.size() != d.blocks().size()) throw std::invalid_argument("need one representative per block");
    Mask sel = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i] >= x.size() || !has_bit(d.blocks()[i], reps[i]))
            throw std::invalid_argument("representative not in its block");
        sel |= Mask{1} << reps[i];
    }
    const FiniteTopSpace y = subspace(x, sel);
    const FiniteTopSpace q = decomposition_topology(x, d);
    // y lists the representatives in point order; send each to its block.
    std::vector<std::size_t> image;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (has_bit(sel, i)) image.push_back(d.block_of(i));
    }
    Verification v;
    v.holds = is_homeomorphism(FiniteMap(y, q, std::move(image)));
    v.hypotheses_met = x.is_hausdorff();
    v.note = v.hypotheses_met ? "hypotheses met" : "hypothesis unmet: space is not Hausdorff";
    return v;
}

Partition fiber_partition(const FiniteMap& f) {
    if (!f.is_surjective()) throw std::invalid_argument("fiber_partition: map is not onto");
    std::vector<Mask> fibers;
    for (std::size_t y = 0; y < f.codomain().size(); ++y) fibers.push_back(f.preimage(Mask{1} << y));
    return Partition(f.domain().size(), fibers);
}

Verification verify_lemma7(const FiniteMap& f) {
    const Partition fibers = fiber_partition(f);
    const FiniteTopSpace q = decomposition_topology(f.domain(), fibers);
    std::vector<std::size_t> image;
    for (Mask b : fibers.blocks()) image.push_back(f(static_cast<std::size_t>(std::countr_zero(b))));
    Verification v;
    v.holds = is_homeomorphism(FiniteMap(q, f.codomain(), std::move(image)));
    const bool cont = is_continuous(f);
    const bool haus = f.codomain().is_hausdorff();
    v.hypotheses_met = cont && haus;
    if (v.hypotheses_met) v.note = "hypotheses met";
    else if (!cont) v.note = "hypothesis unmet: map is not continuous";
    else v.note = "hypothesis unmet: codomain is not Hausdorff";
    return v;
}

std::vector<FiniteTopSpace> all_topologies(std::size_t n) {
    if (n < 1 || n > 5) throw std::invalid_argument("all_topologies supports 1..5 points");
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) off.emplace_back(i, j);
        }
    }
    std::vector<FiniteTopSpace> out;
    const auto labels = FiniteTopSpace::letter_labels(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size()); ++bits) {
        // up[i] = points forced into every open set containing i.
        std::vector<Mask> up(n);
        for (std::size_t i = 0; i < n; ++i) up[i] = Mask{1} << i;
        for (std::size_t k = 0; k < off.size(); ++k) {
            if ((bits >> k) & 1U) up[off[k].first] |= Mask{1} << off[k].second;
        }
        bool transitive = true;
        for (std::size_t i = 0; i < n && transitive; ++i) {
            for (std::size_t j = 0; j < n && transitive; ++j) {
                if (has_bit(up[i], j) && (up[j] & ~up[i])) transitive = false;
            }
        }
        if (!transitive) continue;
        std::vector<Mask> opens;
        for (Mask u = 0; u <= full_mask(n); ++u) {
            bool closed_up = true;
            for (std::size_t i = 0; i < n && closed_up; ++i) {
                if (has_bit(u, i) && (up[i] & ~u)) closed_up = false;
            }
            if (closed_up) opens.push_back(u);
        }
        out.emplace_back(labels, std::move(opens));
    }
    return out;
}

std::vector<Partition> all_partitions(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::size_t> rgs(n, 0);
    while (true) {
        std::size_t blocks = 0;
        for (auto r : rgs) blocks = std::max(blocks, r + 1);
        std::vector<Mask> masks(blocks, 0);
        for (std::size_t i = 0; i < n; ++i) masks[rgs[i]] |= Mask{1} << i;
        out.emplace_back(n, std::move(masks));
        // Next restricted growth string: rgs[i] <= 1 + max(rgs[0..i)).
        std::size_t i = n;
        while (i-- > 1) {
            std::size_t prefix_max = 0;
            for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
            if (rgs[i] <= prefix_max) {
                ++rgs[i];
                std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0 || n <= 1) break;
    }
    return out;
}

CheckReport sweep_decomposition(std::size_t n) {
    CheckReport rep("decomposition topologies on " + std::to_string(n) + " labelled points");
    const auto spaces = all_topologies(n);
    const auto parts = all_partitions(n);
    std::size_t count = 0;
    std::string bad;
    for (const auto& x : spaces) {
        for (const auto& d : parts) {
            try {
                const auto q = decomposition_topology(x, d);
                if (!is_topology(q.size(), q.opens()) && bad.empty()) bad = "not a topology";
            } catch (const std::invalid_argument& e) {
                if (bad.empty()) bad = e.what();
            }
            ++count;
        }
    }
    // Labelled topologies on 0..5 points.
    static constexpr std::size_t known[] = {1, 1, 4, 29, 355, 6942};
    rep.add("topology_count", spaces.size() == known[n],
            std::to_string(spaces.size()) + " topologies, " + std::to_string(parts.size()) + " partitions");
    rep.add("quotients_are_topologies", bad.empty(), bad.empty() ? std::to_string(count) + " instances" : bad);

    std::string bad_id;
    for (const auto& x : spaces) {
        const auto q = decomposition_topology(x, Partition::singletons(n));
        std::vector<std::size_t> id(n);
        for (std::size_t i = 0; i < n; ++i) id[i] = i;
        if (!is_homeomorphism(FiniteMap(x, q, id)) && bad_id.empty()) bad_id = "singleton quotient differs";
    }
    rep.add("singleton_quotient_is_identity", bad_id.empty(),
            bad_id.empty() ? std::to_string(spaces.size()) + " spaces" : bad_id);
    return rep;
}

CheckReport sweep_prop5(std::size_t max_points) {
    CheckReport rep("representative subspaces of discrete spaces up to " + std::to_string(max_points) + " points");
    std::size_t count = 0;
    std::string bad;
    for (std::size_t n = 1; n <= max_points; ++n) {
        const auto x = FiniteTopSpace::discrete(n);
        for (const auto& d : all_partitions(n)) {
            const auto& blocks = d.blocks();
            // Odometer over one member per block.
            std::vector<std::size_t> pick(blocks.size(), 0);
            while (true) {
                std::vector<std::size_t> reps;
                for (std::size_t b = 0; b < blocks.size(); ++b) {
                    Mask m = blocks[b];
                    for (std::size_t s = 0; s < pick[b]; ++s) m &= m - 1;
                    reps.push_back(static_cast<std::size_t>(std::countr_zero(m)));
                }
                const auto v = verify_prop5(x, d, reps);
                ++count;
                if ((!v.holds || !v.hypotheses_met) && bad.empty())
                    bad = "fails on discrete" + std::to_string(n) + " block count " + std::to_string(blocks.size());
                std::size_t b = 0;
                while (b < blocks.size() && ++pick[b] == static_cast<std::size_t>(std::popcount(blocks[b]))) pick[b++] = 0;
                if (b == blocks.size()) break;
            }
        }
    }
    rep.add("representatives_homeomorphic", bad.empty(), bad.empty() ? std::to_string(count) + " instances" : bad);
    return rep;
}

CheckReport sweep_lemma7(std::size_t max_domain, std::size_t max_codomain) {
    CheckReport rep("fiber quotients of continuous surjections onto discrete spaces (domain <= " +
                    std::to_string(max_domain) + ", codomain <= " + std::to_string(max_codomain) + ")");
    std::size_t count = 0;
    std::string bad;
    for (std::size_t m = 1; m <= max_domain; ++m) {
        const auto spaces = all_topologies(m);
        for (std::size_t k = 1; k <= max_codomain && k <= m; ++k) {
            const auto y = FiniteTopSpace::discrete(k);
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < m; ++i) total *= k;
            for (const auto& x : spaces) {
                for (std::uint64_t code = 0; code < total; ++code) {
                    std::vector<std::size_t> img(m);
                    std::uint64_t c = code;
                    Mask hit = 0;
                    for (std::size_t i = 0; i < m; ++i) {
                        img[i] = c % k;
                        c /= k;
                        hit |= Mask{1} << img[i];
                    }
                    if (hit != full_mask(k)) continue;
                    FiniteMap f(x, y, std::move(img));
                    if (!is_continuous(f)) continue;
                    const auto v = verify_lemma7(f);
                    ++count;
                    if ((!v.holds || !v.hypotheses_met) && bad.empty())
                        bad = "fails on a " + std::to_string(m) + "-point domain onto discrete" + std::to_string(k);
                }
            }
        }
    }
    rep.add("fiber_quotient_homeomorphic", bad.empty(), bad.empty() ? std::to_string(count) + " maps" : bad);
    return rep;
}

}  // namespace pchaos
