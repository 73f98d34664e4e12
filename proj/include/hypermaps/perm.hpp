#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypermaps/errors.hpp"

namespace hypermaps {

/// A bijection of {1..n}. Immutable; every interface is 1-based.
class Permutation {
public:
    static Permutation identity(int degree);

    /// images[i] is the image of i+1. Throws ValidationError unless the
    /// vector is a bijection of {1..degree}.
    static Permutation from_images(std::vector<int> images);

    /// Disjoint cycles on {1..degree}; elements not mentioned stay fixed.
    /// Throws ValidationError on out-of-range or repeated elements.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    static Permutation transposition(int degree, int a, int b);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x) - 1]; }

    Permutation inverse() const;
    bool is_identity() const;
    bool is_involution() const;
    bool is_fixed_point_free() const;

    /// Moved points, ascending.
    std::vector<int> support() const;

    bool operator==(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

    std::vector<int> images_;
};

/// compose(p, q) applies q first: result(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Disjoint cycles covering {1..degree}, fixed points included as 1-cycles.
/// Canonical form: each cycle starts at its minimum, cycles sorted by minimum.
struct CycleDecomposition {
    int degree = 0;
    std::vector<std::vector<int>> cycles;

    std::size_t cycle_count() const { return cycles.size(); }
    Permutation to_permutation() const;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// Finest partition of {1..n} into blocks invariant under every generator.
/// Blocks and their elements come out sorted; no generators gives n singletons.
std::vector<std::vector<int>> orbits(std::span<const Permutation> generators, int domain_size);

/// p restricted to an invariant subset: acts as p there, fixes everything
/// else (labels are kept, not compacted). Throws NotInvariant if p maps the
/// subset outside itself.
Permutation restrict_to(const Permutation& p, std::span<const int> subset);

/// Cycle notation ("id" or "(1 3 5)(7 8 12)"); fixed points are omitted when
/// formatting and permitted as singleton cycles when parsing.
Permutation parse_cycles(std::string_view text, int degree);
std::string format_cycles(const Permutation& p);

}  // namespace hypermaps
