#include "hypermaps/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hypermaps {

Permutation Permutation::identity(int degree) {
    if (degree < 1) throw ValidationError("permutation degree must be at least 1");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1) throw ValidationError("permutation degree must be at least 1");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int value : images) {
        if (value < 1 || value > n)
            throw ValidationError("image " + std::to_string(value) + " outside {1.." + std::to_string(n) + "}");
        if (seen[static_cast<std::size_t>(value) - 1])
            throw ValidationError("image " + std::to_string(value) + " repeated; not a bijection");
        seen[static_cast<std::size_t>(value) - 1] = true;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    if (degree < 1) throw ValidationError("permutation degree must be at least 1");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& cycle : cycles) {
        if (cycle.empty()) throw ValidationError("empty cycle");
        for (int x : cycle) {
            if (x < 1 || x > degree)
                throw ValidationError("cycle element " + std::to_string(x) + " outside {1.." +
                                      std::to_string(degree) + "}");
            if (used[static_cast<std::size_t>(x) - 1])
                throw ValidationError("cycle element " + std::to_string(x) + " repeated");
            used[static_cast<std::size_t>(x) - 1] = true;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            images[static_cast<std::size_t>(cycle[i]) - 1] = cycle[(i + 1) % cycle.size()];
    }
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int a, int b) {
    return from_cycles(degree, {{a, b}});
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        images[static_cast<std::size_t>(images_[i]) - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

bool Permutation::is_involution() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[static_cast<std::size_t>(images_[i]) - 1] != static_cast<int>(i) + 1) return false;
    return true;
}

bool Permutation::is_fixed_point_free() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] == static_cast<int>(i) + 1) return false;
    return true;
}

std::vector<int> Permutation::support() const {
    std::vector<int> moved;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) moved.push_back(static_cast<int>(i) + 1);
    return moved;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw DomainMismatch("cannot compose permutations of degree " + std::to_string(p.degree()) +
                             " and " + std::to_string(q.degree()));
    std::vector<int> images(static_cast<std::size_t>(p.degree()));
    for (int x = 1; x <= p.degree(); ++x) images[static_cast<std::size_t>(x) - 1] = p(q(x));
    return Permutation::from_images(std::move(images));
}

Permutation CycleDecomposition::to_permutation() const {
    return Permutation::from_cycles(degree, cycles);
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
    CycleDecomposition dec;
    dec.degree = p.degree();
    std::vector<bool> visited(static_cast<std::size_t>(p.degree()), false);
    for (int start = 1; start <= p.degree(); ++start) {
        if (visited[static_cast<std::size_t>(start) - 1]) continue;
        std::vector<int> cycle;
        for (int x = start; !visited[static_cast<std::size_t>(x) - 1]; x = p(x)) {
            visited[static_cast<std::size_t>(x) - 1] = true;
            cycle.push_back(x);
        }
        dec.cycles.push_back(std::move(cycle));
    }
    return dec;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

}  // namespace

std::vector<std::vector<int>> orbits(std::span<const Permutation> generators, int domain_size) {
    if (domain_size < 1) throw ValidationError("orbit domain must be at least {1..1}");
    for (const auto& g : generators)
        if (g.degree() != domain_size)
            throw DomainMismatch("orbit generator degree " + std::to_string(g.degree()) +
                                 " does not match domain size " + std::to_string(domain_size));

    std::vector<int> parent(static_cast<std::size_t>(domain_size) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& g : generators) {
        for (int x = 1; x <= domain_size; ++x) {
            int a = find_root(parent, x);
            int b = find_root(parent, g(x));
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }

    std::vector<int> block_of(static_cast<std::size_t>(domain_size) + 1, -1);
    std::vector<std::vector<int>> blocks;
    for (int x = 1; x <= domain_size; ++x) {
        int root = find_root(parent, x);
        if (block_of[static_cast<std::size_t>(root)] < 0) {
            block_of[static_cast<std::size_t>(root)] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(root)])].push_back(x);
    }
    return blocks;
}

Permutation restrict_to(const Permutation& p, std::span<const int> subset) {
    std::vector<bool> member(static_cast<std::size_t>(p.degree()), false);
    for (int x : subset) {
        if (x < 1 || x > p.degree())
            throw NotInvariant("subset element " + std::to_string(x) + " outside the domain");
        member[static_cast<std::size_t>(x) - 1] = true;
    }
    std::vector<int> images(static_cast<std::size_t>(p.degree()));
    std::iota(images.begin(), images.end(), 1);
    for (int x = 1; x <= p.degree(); ++x) {
        if (!member[static_cast<std::size_t>(x) - 1]) continue;
        if (!member[static_cast<std::size_t>(p(x)) - 1])
            throw NotInvariant("subset is not invariant: " + std::to_string(x) + " maps to " +
                               std::to_string(p(x)));
        images[static_cast<std::size_t>(x) - 1] = p(x);
    }
    return Permutation::from_images(std::move(images));
}

namespace {

void skip_spaces(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

int parse_int(std::string_view text, std::size_t& pos, int degree) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer", 0, static_cast<int>(start) + 1);
    long value = 0;
    for (std::size_t i = start; i < pos; ++i) {
        value = value * 10 + (text[i] - '0');
        if (value > degree) break;
    }
    if (value < 1 || value > degree)
        throw ParseError("element " + std::string(text.substr(start, pos - start)) + " outside {1.." +
                             std::to_string(degree) + "}",
                         0, static_cast<int>(start) + 1);
    return static_cast<int>(value);
}

}  // namespace

Permutation parse_cycles(std::string_view text, int degree) {
    std::size_t pos = 0;
    skip_spaces(text, pos);
    if (text.substr(pos, 2) == "id") {
        pos += 2;
        skip_spaces(text, pos);
        if (pos != text.size()) throw ParseError("trailing input after \"id\"", 0, static_cast<int>(pos) + 1);
        return Permutation::identity(degree);
    }

    std::vector<std::vector<int>> cycles;
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    if (pos == text.size()) throw ParseError("expected \"id\" or a cycle", 0, static_cast<int>(pos) + 1);
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '('", 0, static_cast<int>(pos) + 1);
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_spaces(text, pos);
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t element_pos = pos;
            int x = parse_int(text, pos, degree);
            if (used[static_cast<std::size_t>(x) - 1])
                throw ParseError("element " + std::to_string(x) + " repeated", 0,
                                 static_cast<int>(element_pos) + 1);
            used[static_cast<std::size_t>(x) - 1] = true;
            cycle.push_back(x);
        }
        if (cycle.empty()) throw ParseError("empty cycle", 0, static_cast<int>(pos));
        cycles.push_back(std::move(cycle));
        skip_spaces(text, pos);
    }
    return Permutation::from_cycles(degree, cycles);
}

std::string format_cycles(const Permutation& p) {
    std::string out;
    for (const auto& cycle : cycle_decomposition(p).cycles) {
        if (cycle.size() < 2) continue;
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    return out.empty() ? "id" : out;
}

}  // namespace hypermaps
