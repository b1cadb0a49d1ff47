#include "folx/kernels.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace folx::kernels {

namespace {

constexpr size_t kScanLimit = 1'000'000'000;
constexpr size_t kChunkRows = 4096;

std::atomic<ExecPolicy> g_policy{
#ifdef _OPENMP
    ExecPolicy::Parallel
#else
    ExecPolicy::Serial
#endif
};

std::atomic<int> g_threads{0};

int effectiveThreads() {
#ifdef _OPENMP
    int t = g_threads.load();
    return t > 0 ? t : omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace

ExecPolicy defaultPolicy() { return g_policy.load(); }
void setDefaultPolicy(ExecPolicy policy) { g_policy.store(policy); }
int threadCount() { return effectiveThreads(); }
void setThreadCount(int threads) { g_threads.store(threads < 0 ? 0 : threads); }

size_t spaceSize(size_t width, uint32_t universeSize) {
    if (universeSize == 0)
        raise(ErrorCode::UniverseMismatch, "universe must have at least one element");
    size_t total = 1;
    for (size_t i = 0; i < width; ++i) {
        if (total > kScanLimit / universeSize)
            raise(ErrorCode::EnumerationTooLarge,
                  "tuple space |D|^" + std::to_string(width) + " with |D|=" +
                      std::to_string(universeSize) + " exceeds the scan limit");
        total *= universeSize;
    }
    return total;
}

void decodeRank(size_t rank, uint32_t universeSize, std::span<Element> out) {
    for (size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Element>(rank % universeSize);
        rank /= universeSize;
    }
}

std::vector<Element> gatherRowsSerial(size_t count, const ChunkFn& fn) {
    std::vector<Element> out;
    fn(0, count, out);
    return out;
}

std::vector<Element> gatherRows(size_t count, const ChunkFn& fn, ExecPolicy policy) {
#ifdef _OPENMP
    if (policy == ExecPolicy::Parallel && count > kChunkRows) {
        size_t chunks = (count + kChunkRows - 1) / kChunkRows;
        std::vector<std::vector<Element>> buffers(chunks);
        std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic, 1) num_threads(effectiveThreads())
        for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
            try {
                size_t begin = static_cast<size_t>(c) * kChunkRows;
                size_t end = std::min(begin + kChunkRows, count);
                fn(begin, end, buffers[static_cast<size_t>(c)]);
            } catch (...) {
#pragma omp critical
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
        size_t total = 0;
        for (const auto& b : buffers)
            total += b.size();
        std::vector<Element> out;
        out.reserve(total);
        for (auto& b : buffers)
            out.insert(out.end(), b.begin(), b.end());
        return out;
    }
#else
    (void)policy;
#endif
    return gatherRowsSerial(count, fn);
}

namespace {

ScanResult scanImpl(size_t width, uint32_t universeSize, const RowPredicate& pred,
                    ExecPolicy policy, bool serialReference) {
    size_t total = spaceSize(width, universeSize);
    if (width == 0) {
        // The space is the single empty row.
        ScanResult r;
        r.rows = pred(std::span<const Element>{}) ? 1 : 0;
        return r;
    }
    ChunkFn chunk = [&](size_t begin, size_t end, std::vector<Element>& out) {
        std::vector<Element> row(width);
        decodeRank(begin, universeSize, row);
        for (size_t rank = begin; rank < end; ++rank) {
            if (pred(row))
                out.insert(out.end(), row.begin(), row.end());
            // advance to the next row in lexicographic order
            for (size_t i = width; i-- > 0;) {
                if (++row[i] < universeSize)
                    break;
                row[i] = 0;
            }
        }
    };
    ScanResult r;
    r.data = serialReference ? gatherRowsSerial(total, chunk)
                             : gatherRows(total, chunk, policy);
    r.rows = r.data.size() / width;
    return r;
}

} // namespace

ScanResult scanSpace(size_t width, uint32_t universeSize, const RowPredicate& pred,
                     ExecPolicy policy) {
    return scanImpl(width, universeSize, pred, policy, false);
}

ScanResult scanSpace(size_t width, uint32_t universeSize, const RowPredicate& pred) {
    return scanImpl(width, universeSize, pred, defaultPolicy(), false);
}

ScanResult scanSpaceSerial(size_t width, uint32_t universeSize, const RowPredicate& pred) {
    return scanImpl(width, universeSize, pred, ExecPolicy::Serial, true);
}

} // namespace folx::kernels
