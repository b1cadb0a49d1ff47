#include "folx/relalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace folx {

namespace {

struct RowKeyHash {
    size_t operator()(const std::vector<Element>& key) const {
        size_t h = 1469598103934665603ull;
        for (Element e : key) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// slot of every index of `sub` inside `super`
std::vector<size_t> slotMap(const IndexSet& sub, const IndexSet& super) {
    std::vector<size_t> slots;
    slots.reserve(sub.size());
    for (const Index& i : sub)
        slots.push_back(*super.slotOf(i));
    return slots;
}

} // namespace

std::vector<Tuple> functionQuotient(const Tuple& h, const IndexTuple& f,
                                    const IndexSet& targetIndexSet, uint32_t universeSize) {
    if (h.indices() != f.indices())
        raise(ErrorCode::IndexSetMismatch,
              "quotient arguments disagree: h over " + h.indices().display() +
                  ", f over " + f.indices().display());

    constexpr Element kFree = static_cast<Element>(-1);
    std::vector<Element> forced(targetIndexSet.size(), kFree);
    for (size_t i = 0; i < f.size(); ++i) {
        auto slot = targetIndexSet.slotOf(f.atSlot(i));
        if (!slot)
            raise(ErrorCode::IndexNotPresent,
                  "value " + f.atSlot(i).display() + " of f is not in the target index set " +
                      targetIndexSet.display());
        Element v = h.atSlot(i);
        if (forced[*slot] != kFree && forced[*slot] != v)
            return {}; // h is inconsistent with identifying these indices
        forced[*slot] = v;
    }

    std::vector<size_t> freeSlots;
    for (size_t s = 0; s < forced.size(); ++s)
        if (forced[s] == kFree)
            freeSlots.push_back(s);

    kernels::spaceSize(freeSlots.size(), universeSize); // enforce the scan limit
    std::vector<Tuple> out;
    std::vector<Element> row = forced;
    for (size_t s : freeSlots)
        row[s] = 0;
    while (true) {
        out.emplace_back(targetIndexSet, row);
        size_t i = freeSlots.size();
        while (i-- > 0) {
            if (++row[freeSlots[i]] < universeSize)
                break;
            row[freeSlots[i]] = 0;
        }
        if (i == static_cast<size_t>(-1))
            break;
    }
    return out;
}

Relation relationQuotient(const Relation& H, const IndexTuple& f) {
    if (f.indices() != H.indexSet())
        raise(ErrorCode::IndexSetMismatch,
              "quotient tuple over " + f.indices().display() + " applied to relation over " +
                  H.indexSet().display());

    std::vector<Index> values(f.values().begin(), f.values().end());
    IndexSet target(std::move(values));

    // With the target being exactly f's value set, each h/f is empty or a
    // single tuple: every target index is forced.
    std::vector<size_t> targetSlotOf(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        targetSlotOf[i] = *target.slotOf(f.atSlot(i));

    constexpr Element kFree = static_cast<Element>(-1);
    RelationBuilder b(target, H.universeSize());
    std::vector<Element> out(target.size());
    for (size_t r = 0; r < H.size(); ++r) {
        auto row = H.row(r);
        std::fill(out.begin(), out.end(), kFree);
        bool ok = true;
        for (size_t i = 0; i < row.size() && ok; ++i) {
            Element& cell = out[targetSlotOf[i]];
            if (cell == kFree)
                cell = row[i];
            else if (cell != row[i])
                ok = false;
        }
        if (ok)
            b.addRow(out);
    }
    return b.build();
}

Relation project(const Relation& r, const IndexSet& subset) {
    if (!subset.subsetOf(r.indexSet()))
        raise(ErrorCode::IndexNotPresent,
              "projection onto " + subset.display() + " from relation over " +
                  r.indexSet().display());
    if (subset == r.indexSet())
        return r;
    auto slots = slotMap(subset, r.indexSet());
    RelationBuilder b(subset, r.universeSize());
    std::vector<Element> out(slots.size());
    for (size_t i = 0; i < r.size(); ++i) {
        auto row = r.row(i);
        for (size_t s = 0; s < slots.size(); ++s)
            out[s] = row[slots[s]];
        b.addRow(out);
    }
    return b.build();
}

Relation join(const Relation& r0, const Relation& r1) {
    if (r0.universeSize() != r1.universeSize())
        raise(ErrorCode::UniverseMismatch,
              "join of relations over universes of size " + std::to_string(r0.universeSize()) +
                  " and " + std::to_string(r1.universeSize()));

    IndexSet resultSet = r0.indexSet().unionWith(r1.indexSet());
    IndexSet common = r0.indexSet().intersect(r1.indexSet());

    const Relation& build = r0.size() <= r1.size() ? r0 : r1;
    const Relation& probe = r0.size() <= r1.size() ? r1 : r0;

    auto commonBuildSlots = slotMap(common, build.indexSet());
    auto commonProbeSlots = slotMap(common, probe.indexSet());

    // each result slot comes from the probe row when possible, else build
    size_t width = resultSet.size();
    std::vector<std::pair<bool, size_t>> source(width); // {fromProbe, parent slot}
    for (size_t s = 0; s < width; ++s) {
        const Index& i = resultSet.at(s);
        if (auto slot = probe.indexSet().slotOf(i))
            source[s] = {true, *slot};
        else
            source[s] = {false, *build.indexSet().slotOf(i)};
    }

    std::unordered_map<std::vector<Element>, std::vector<uint32_t>, RowKeyHash> buildIndex;
    buildIndex.reserve(build.size());
    {
        std::vector<Element> key(common.size());
        for (size_t i = 0; i < build.size(); ++i) {
            auto row = build.row(i);
            for (size_t s = 0; s < key.size(); ++s)
                key[s] = row[commonBuildSlots[s]];
            buildIndex[key].push_back(static_cast<uint32_t>(i));
        }
    }

    if (width == 0) {
        // both operands are zero-ary truth values
        bool truth = build.size() == 1 && probe.size() == 1;
        return truth ? Relation::truth(r0.universeSize()) : Relation::falsity(r0.universeSize());
    }

    auto chunk = [&](size_t beginRow, size_t endRow, std::vector<Element>& out) {
        std::vector<Element> key(common.size());
        for (size_t p = beginRow; p < endRow; ++p) {
            auto probeRow = probe.row(p);
            for (size_t s = 0; s < key.size(); ++s)
                key[s] = probeRow[commonProbeSlots[s]];
            auto it = buildIndex.find(key);
            if (it == buildIndex.end())
                continue;
            for (uint32_t bIdx : it->second) {
                auto buildRow = build.row(bIdx);
                for (size_t s = 0; s < width; ++s)
                    out.push_back(source[s].first ? probeRow[source[s].second]
                                                  : buildRow[source[s].second]);
            }
        }
    };
    std::vector<Element> rows = kernels::gatherRows(probe.size(), chunk, kernels::defaultPolicy());
    return Relation::fromRows(std::move(resultSet), r0.universeSize(), std::move(rows));
}

Relation complement(const Relation& r) {
    auto scan = kernels::scanSpace(r.width(), r.universeSize(),
                                   [&](std::span<const Element> row) { return !r.containsRow(row); });
    if (r.width() == 0)
        return scan.rows ? Relation::truth(r.universeSize()) : Relation::falsity(r.universeSize());
    return Relation::fromSortedRows(r.indexSet(), r.universeSize(), std::move(scan.data));
}

namespace {

enum class MergeOp { Union, Intersection };

Relation mergeRows(const Relation& r0, const Relation& r1, MergeOp op) {
    if (r0.indexSet() != r1.indexSet())
        raise(ErrorCode::IndexSetMismatch,
              "set operation on relations over " + r0.indexSet().display() + " and " +
                  r1.indexSet().display());
    if (r0.universeSize() != r1.universeSize())
        raise(ErrorCode::UniverseMismatch, "set operation on relations over different universes");

    size_t w = r0.width();
    if (w == 0) {
        bool keep = op == MergeOp::Union ? (r0.size() + r1.size() > 0)
                                         : (r0.size() == 1 && r1.size() == 1);
        return keep ? Relation::truth(r0.universeSize()) : Relation::falsity(r0.universeSize());
    }

    auto cmp = [](std::span<const Element> a, std::span<const Element> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    std::vector<Element> out;
    size_t i = 0, j = 0;
    while (i < r0.size() && j < r1.size()) {
        auto a = r0.row(i);
        auto b = r1.row(j);
        if (cmp(a, b)) {
            if (op == MergeOp::Union)
                out.insert(out.end(), a.begin(), a.end());
            ++i;
        } else if (cmp(b, a)) {
            if (op == MergeOp::Union)
                out.insert(out.end(), b.begin(), b.end());
            ++j;
        } else {
            out.insert(out.end(), a.begin(), a.end());
            ++i;
            ++j;
        }
    }
    if (op == MergeOp::Union) {
        for (; i < r0.size(); ++i)
            out.insert(out.end(), r0.row(i).begin(), r0.row(i).end());
        for (; j < r1.size(); ++j)
            out.insert(out.end(), r1.row(j).begin(), r1.row(j).end());
    }
    return Relation::fromSortedRows(r0.indexSet(), r0.universeSize(), std::move(out));
}

} // namespace

Relation setUnion(const Relation& r0, const Relation& r1) {
    return mergeRows(r0, r1, MergeOp::Union);
}

Relation setIntersection(const Relation& r0, const Relation& r1) {
    return mergeRows(r0, r1, MergeOp::Intersection);
}

Relation cylindrify(const Relation& r, const IndexSet& extra) {
    if (!extra.disjointWith(r.indexSet()))
        raise(ErrorCode::IndexSetOverlap,
              "cylindrification by " + extra.display() + " overlaps " + r.indexSet().display());
    if (extra.empty())
        return r;
    return join(r, fullRelation(extra, r.universeSize()));
}

Relation fullRelation(const IndexSet& indexSet, uint32_t universeSize) {
    auto scan = kernels::scanSpace(indexSet.size(), universeSize,
                                   [](std::span<const Element>) { return true; });
    if (indexSet.empty())
        return Relation::truth(universeSize);
    return Relation::fromSortedRows(indexSet, universeSize, std::move(scan.data));
}

} // namespace folx
