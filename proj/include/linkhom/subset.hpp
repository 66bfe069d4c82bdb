#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace linkhom {

// Subset of {1,...,n} packed into a machine word; element i occupies bit i-1.
// Supports n up to 20.
class SubsetMask {
public:
    static constexpr int kMaxElements = 20;

    SubsetMask() = default;
    explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}
    SubsetMask(std::initializer_list<int> elements) {
        for (int i : elements) bits_ |= bit(i);
    }

    static SubsetMask full(int n) { return SubsetMask((1u << n) - 1u); }

    bool contains(int i) const { return (bits_ & bit(i)) != 0; }
    SubsetMask with(int i) const { return SubsetMask(bits_ | bit(i)); }
    SubsetMask without(int i) const { return SubsetMask(bits_ & ~bit(i)); }
    SubsetMask complement(int n) const { return SubsetMask(full(n).bits_ & ~bits_); }

    friend SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
    friend SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }

    bool empty() const { return bits_ == 0; }
    int count() const { return std::popcount(bits_); }
    bool is_subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
    // largest element; 0 for the empty set
    int max_element() const { return bits_ == 0 ? 0 : std::bit_width(bits_); }

    std::uint32_t bits() const { return bits_; }
    std::vector<int> elements() const;
    std::string str() const;  // "{1,4}"

    friend bool operator==(SubsetMask a, SubsetMask b) { return a.bits_ == b.bits_; }
    friend bool operator!=(SubsetMask a, SubsetMask b) { return a.bits_ != b.bits_; }
    friend bool operator<(SubsetMask a, SubsetMask b) { return a.bits_ < b.bits_; }

private:
    static std::uint32_t bit(int i) { return 1u << (i - 1); }

    std::uint32_t bits_ = 0;
};

// Order on subsets by their ascending element sequence, e.g. {1,4} < {4}.
// Canonical order for rendering families of subsets.
bool lex_less(SubsetMask a, SubsetMask b);

}  // namespace linkhom
