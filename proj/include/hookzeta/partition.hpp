#pragma once

#include "hookzeta/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hookzeta {

/// Weakly decreasing sequence of positive integers; () is the empty partition.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts); // throws std::invalid_argument

    /// (arm, 1^leg); arm >= 1, leg >= 0.
    static Partition hook_shape(int arm, int leg);

    const std::vector<int>& parts() const { return parts_; }
    /// k-th part, 0-based; 0 beyond the last row.
    int part(size_t k) const { return k < parts_.size() ? parts_[k] : 0; }
    size_t length() const { return parts_.size(); }
    /// Sum of parts, |lambda|.
    int size() const;
    bool empty() const { return parts_.empty(); }

    bool contains(const Partition& inner) const;

    bool operator==(const Partition&) const = default;

    /// "[3,1,1]"; the empty partition is "[]".
    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

/// Canonical order: by size, within a size reverse-lexicographic, so that
/// partitions_of(n) is sorted and (n) comes first, (1^n) last.
bool canonical_less(const Partition& a, const Partition& b);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

/// outer/inner with inner contained in outer.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner); // throws if inner does not fit
    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    /// Cells of outer minus inner as 0-based (row, col), row-major.
    std::vector<std::pair<int, int>> cells() const;

private:
    Partition outer_;
    Partition inner_;
};

struct Hook {
    int arm = 1; // >= 1
    int leg = 0; // >= 0
    Partition to_partition() const { return Partition::hook_shape(arm, leg); }
    bool operator==(const Hook&) const = default;
};

/// (a, 1^b) recognition; nullopt for () and for non-hooks.
std::optional<Hook> as_hook(const Partition& p);

/// All partitions of n in canonical (reverse-lexicographic) order.
std::vector<Partition> partitions_of(int n);

/// Diagram transpose.
Partition conjugate(const Partition& p);

struct RimHookCheck {
    bool is_rim_hook = false;
    int height = 0; // number of occupied rows, valid only when is_rim_hook
};

/// Edgewise-connected skew shape with no 2x2 block; the empty shape does not count.
RimHookCheck is_rim_hook(const SkewShape& s);

/// Every mu containing lambda with mu/lambda a rim hook of size r, with heights.
/// Computed on first-column hook lengths (beta-sets): adding an r-rim-hook moves
/// one beta number up by r; the height is one more than the number of beta
/// numbers jumped over.
std::vector<std::pair<Partition, int>> addable_rim_hooks(const Partition& lambda, int r);

/// Centralizer order z_lambda = prod k^{m_k} m_k! over part values k with
/// multiplicity m_k.
Integer centralizer_order(const Partition& p);

} // namespace hookzeta
