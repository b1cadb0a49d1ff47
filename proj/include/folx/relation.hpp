#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "folx/tuple.hpp"

namespace folx {

// A finite relation: a set of same-typed tuples over a finite universe.
// Rows are stored flat in lexicographic order without duplicates, so two
// relations are equal iff their representations are.
//
// A relation on the empty index set has zero-width rows and either zero
// rows (falsity) or one (truth).
class Relation {
public:
    Relation() = default;
    Relation(IndexSet indexSet, uint32_t universeSize);

    static Relation fromRows(IndexSet indexSet, uint32_t universeSize,
                             std::vector<Element> rows);
    // Trusted path for kernel output: rows must already be sorted, unique
    // and range-checked.
    static Relation fromSortedRows(IndexSet indexSet, uint32_t universeSize,
                                   std::vector<Element> rows);
    static Relation fromTuples(IndexSet indexSet, uint32_t universeSize,
                               std::span<const Tuple> tuples);
    static Relation truth(uint32_t universeSize);
    static Relation falsity(uint32_t universeSize);

    const IndexSet& indexSet() const { return indexSet_; }
    uint32_t universeSize() const { return universeSize_; }
    size_t width() const { return indexSet_.size(); }
    size_t size() const { return rowCount_; }
    bool empty() const { return rowCount_ == 0; }

    std::span<const Element> row(size_t i) const {
        return {data_.data() + i * width(), width()};
    }
    Tuple tupleAt(size_t i) const;
    std::vector<Tuple> tuples() const;

    // Membership. The row must be aligned with the index set's canonical
    // order; a Tuple is accepted only over the same index set.
    bool containsRow(std::span<const Element> row) const;
    bool contains(const Tuple& t) const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    IndexSet indexSet_;
    uint32_t universeSize_ = 0;
    size_t rowCount_ = 0;
    std::vector<Element> data_; // rowCount_ * width() elements, sorted, unique

    friend class RelationBuilder;
};

// Accumulates rows, then sorts, deduplicates and range-checks on build().
class RelationBuilder {
public:
    RelationBuilder(IndexSet indexSet, uint32_t universeSize);

    void addRow(std::span<const Element> row);
    void addRow(std::initializer_list<Element> row);
    void addTuple(const Tuple& t);
    // Appends pre-sorted flat rows (e.g. a kernel scan result).
    void addFlat(std::span<const Element> rows);

    Relation build();

private:
    IndexSet indexSet_;
    uint32_t universeSize_;
    size_t zeroWidthRows_ = 0;
    std::vector<Element> data_;
};

} // namespace folx
