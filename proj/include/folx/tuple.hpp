#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "folx/index.hpp"

namespace folx {

// A tuple is a total function from a finite index set to values.
// Values are stored aligned with the index set's canonical order, so
// structural equality and ordering are plain vector comparisons.
template <typename V>
class BasicTuple {
public:
    BasicTuple() = default;

    BasicTuple(IndexSet indices, std::vector<V> values)
        : indices_(std::move(indices)), values_(std::move(values)) {
        if (indices_.size() != values_.size())
            raise(ErrorCode::IndexSetMismatch,
                  "tuple has " + std::to_string(values_.size()) + " values for index set " +
                      indices_.display());
    }

    static BasicTuple fromPairs(std::vector<std::pair<Index, V>> pairs) {
        std::vector<Index> idx;
        idx.reserve(pairs.size());
        for (const auto& [i, v] : pairs)
            idx.push_back(i);
        IndexSet set(std::move(idx));
        if (set.size() != pairs.size())
            raise(ErrorCode::IndexSetMismatch, "duplicate index in tuple literal");
        std::vector<V> values(set.size());
        for (auto& [i, v] : pairs)
            values[*set.slotOf(i)] = std::move(v);
        return BasicTuple(std::move(set), std::move(values));
    }

    const IndexSet& indices() const { return indices_; }
    std::span<const V> values() const { return values_; }
    size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    const V& at(const Index& i) const {
        auto slot = indices_.slotOf(i);
        if (!slot)
            raise(ErrorCode::IndexNotPresent,
                  "index " + i.display() + " not in tuple over " + indices_.display());
        return values_[*slot];
    }

    const V& atSlot(size_t slot) const { return values_[slot]; }

    friend bool operator==(const BasicTuple&, const BasicTuple&) = default;
    friend auto operator<=>(const BasicTuple& a, const BasicTuple& b) {
        if (auto c = a.indices_ <=> b.indices_; c != 0)
            return c;
        return a.values_ <=> b.values_;
    }

private:
    IndexSet indices_;
    std::vector<V> values_;
};

// Element-valued tuple: a row of a relation, or a variable assignment.
using Tuple = BasicTuple<Element>;

// Index-valued tuple: maps one index set into another. Carries variable
// tuples such as (x,x,y) and renamings such as a parameter enumeration's
// inverse.
using IndexTuple = BasicTuple<Index>;

// (v_0,...,v_{n-1}) as a positional tuple of name indices.
IndexTuple varTuple(std::span<const std::string> vars);
IndexTuple varTuple(std::initializer_list<std::string> vars);

// Maps every index of `set` to itself.
IndexTuple identityTuple(const IndexSet& set);

// The inverse of a parameter enumeration (x_0,...,x_{n-1}): maps name x_i
// to position i. Requires all names distinct.
IndexTuple enumerationInverse(std::span<const std::string> params);

// Convenience for tests and builders: named tuple from (name, value) pairs.
Tuple namedTuple(std::initializer_list<std::pair<std::string, Element>> pairs);
// Positional tuple (v_0,...,v_{n-1}).
Tuple positionalTuple(std::initializer_list<Element> values);
Tuple positionalTuple(std::span<const Element> values);

} // namespace folx
