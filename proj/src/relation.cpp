#include "folx/relation.hpp"

#include <algorithm>

namespace folx {

namespace {

// Sorts flat rows of the given width in place and removes duplicates.
// Returns the resulting row count.
size_t sortUniqueRows(std::vector<Element>& data, size_t width) {
    if (width == 0)
        return 0;
    size_t rows = data.size() / width;
    std::vector<size_t> order(rows);
    for (size_t i = 0; i < rows; ++i)
        order[i] = i;
    auto less = [&](size_t a, size_t b) {
        return std::lexicographical_compare(data.begin() + a * width, data.begin() + (a + 1) * width,
                                            data.begin() + b * width, data.begin() + (b + 1) * width);
    };
    auto equal = [&](size_t a, size_t b) {
        return std::equal(data.begin() + a * width, data.begin() + (a + 1) * width,
                          data.begin() + b * width);
    };
    std::sort(order.begin(), order.end(), less);
    order.erase(std::unique(order.begin(), order.end(), equal), order.end());
    std::vector<Element> sorted;
    sorted.reserve(order.size() * width);
    for (size_t i : order)
        sorted.insert(sorted.end(), data.begin() + i * width, data.begin() + (i + 1) * width);
    data = std::move(sorted);
    return order.size();
}

} // namespace

Relation::Relation(IndexSet indexSet, uint32_t universeSize)
    : indexSet_(std::move(indexSet)), universeSize_(universeSize) {
    if (universeSize_ == 0)
        raise(ErrorCode::UniverseMismatch, "universe must have at least one element");
}

Relation Relation::fromRows(IndexSet indexSet, uint32_t universeSize,
                            std::vector<Element> rows) {
    Relation r(std::move(indexSet), universeSize);
    for (Element e : rows)
        if (e >= universeSize)
            raise(ErrorCode::UniverseMismatch,
                  "element " + std::to_string(e) + " outside universe of size " +
                      std::to_string(universeSize));
    if (r.width() == 0) {
        if (!rows.empty())
            raise(ErrorCode::IndexSetMismatch, "zero-width relation given nonempty rows");
        return r;
    }
    if (rows.size() % r.width() != 0)
        raise(ErrorCode::IndexSetMismatch, "flat row data does not divide into rows");
    r.data_ = std::move(rows);
    r.rowCount_ = sortUniqueRows(r.data_, r.width());
    return r;
}

Relation Relation::fromSortedRows(IndexSet indexSet, uint32_t universeSize,
                                  std::vector<Element> rows) {
    Relation r(std::move(indexSet), universeSize);
    if (r.width() == 0) {
        if (!rows.empty())
            raise(ErrorCode::IndexSetMismatch, "zero-width relation given nonempty rows");
        return r;
    }
    r.rowCount_ = rows.size() / r.width();
    r.data_ = std::move(rows);
    return r;
}

Relation Relation::fromTuples(IndexSet indexSet, uint32_t universeSize,
                              std::span<const Tuple> tuples) {
    RelationBuilder b(std::move(indexSet), universeSize);
    for (const auto& t : tuples)
        b.addTuple(t);
    return b.build();
}

Relation Relation::truth(uint32_t universeSize) {
    Relation r(IndexSet{}, universeSize);
    r.rowCount_ = 1;
    return r;
}

Relation Relation::falsity(uint32_t universeSize) {
    return Relation(IndexSet{}, universeSize);
}

Tuple Relation::tupleAt(size_t i) const {
    auto r = row(i);
    return Tuple(indexSet_, std::vector<Element>(r.begin(), r.end()));
}

std::vector<Tuple> Relation::tuples() const {
    std::vector<Tuple> out;
    out.reserve(rowCount_);
    for (size_t i = 0; i < rowCount_; ++i)
        out.push_back(tupleAt(i));
    return out;
}

bool Relation::containsRow(std::span<const Element> row) const {
    size_t w = width();
    if (row.size() != w)
        raise(ErrorCode::IndexSetMismatch, "row width does not match relation");
    if (w == 0)
        return rowCount_ == 1;
    size_t lo = 0, hi = rowCount_;
    while (lo < hi) {
        size_t mid = lo + (hi - lo) / 2;
        const Element* p = data_.data() + mid * w;
        int cmp = 0;
        for (size_t i = 0; i < w; ++i) {
            if (p[i] != row[i]) {
                cmp = p[i] < row[i] ? -1 : 1;
                break;
            }
        }
        if (cmp == 0)
            return true;
        if (cmp < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return false;
}

bool Relation::contains(const Tuple& t) const {
    if (t.indices() != indexSet_)
        raise(ErrorCode::IndexSetMismatch,
              "tuple over " + t.indices().display() + " tested against relation over " +
                  indexSet_.display());
    return containsRow(t.values());
}

RelationBuilder::RelationBuilder(IndexSet indexSet, uint32_t universeSize)
    : indexSet_(std::move(indexSet)), universeSize_(universeSize) {
    if (universeSize_ == 0)
        raise(ErrorCode::UniverseMismatch, "universe must have at least one element");
}

void RelationBuilder::addRow(std::span<const Element> row) {
    if (row.size() != indexSet_.size())
        raise(ErrorCode::IndexSetMismatch, "row width does not match index set");
    if (indexSet_.empty()) {
        zeroWidthRows_ = 1;
        return;
    }
    data_.insert(data_.end(), row.begin(), row.end());
}

void RelationBuilder::addRow(std::initializer_list<Element> row) {
    addRow(std::span<const Element>(row.begin(), row.size()));
}

void RelationBuilder::addTuple(const Tuple& t) {
    if (t.indices() != indexSet_)
        raise(ErrorCode::IndexSetMismatch,
              "tuple over " + t.indices().display() + " added to relation over " +
                  indexSet_.display());
    addRow(t.values());
}

void RelationBuilder::addFlat(std::span<const Element> rows) {
    if (indexSet_.empty()) {
        if (!rows.empty())
            raise(ErrorCode::IndexSetMismatch, "zero-width relation given nonempty rows");
        return;
    }
    data_.insert(data_.end(), rows.begin(), rows.end());
}

Relation RelationBuilder::build() {
    Relation r(indexSet_, universeSize_);
    if (indexSet_.empty()) {
        r.rowCount_ = zeroWidthRows_;
        return r;
    }
    return Relation::fromRows(indexSet_, universeSize_, std::move(data_));
}

} // namespace folx
