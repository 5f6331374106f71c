#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cis/types.hpp"

namespace cis {

/// Subset of vertex ids 0..63 backed by a single machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return bits_ >> v & 1; }

    /// Smallest member; undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr VertexSet& add(int v) {
        bits_ |= std::uint64_t{1} << v;
        return *this;
    }
    constexpr VertexSet& remove(int v) {
        bits_ &= ~(std::uint64_t{1} << v);
        return *this;
    }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Iterates members in increasing order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> ids() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    /// "0,2,5" — the CLI line format for enumerated sets.
    std::string to_string() const {
        std::string out;
        for (int v : *this) {
            if (!out.empty()) out.push_back(',');
            out += std::to_string(v);
        }
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace cis
