#pragma once

#include <functional>
#include <span>
#include <vector>

#include "folx/index.hpp"

namespace folx::kernels {

enum class ExecPolicy { Serial, Parallel };

// Process-wide default used by the relational operations. Parallel when
// OpenMP is compiled in, Serial otherwise.
ExecPolicy defaultPolicy();
void setDefaultPolicy(ExecPolicy policy);
int threadCount();
void setThreadCount(int threads); // 0 = OpenMP default

// Number of rows in the full tuple space {0..width-1} -> {0..universeSize-1}.
// Raises EnumerationTooLarge past the scan limit (the engine enumerates;
// it is built for desk-scale universes).
size_t spaceSize(size_t width, uint32_t universeSize);

// Decodes a lexicographic rank into row digits, most significant first.
// Scanning ranks in increasing order yields rows in increasing
// lexicographic order.
void decodeRank(size_t rank, uint32_t universeSize, std::span<Element> out);

using ChunkFn = std::function<void(size_t begin, size_t end, std::vector<Element>& out)>;

// Runs `fn` over [0,count) partitioned into ordered chunks; each chunk
// appends whole rows to its own buffer and the buffers are concatenated in
// chunk order. Serial and parallel execution produce identical bytes.
std::vector<Element> gatherRows(size_t count, const ChunkFn& fn, ExecPolicy policy);

// Plain single-buffer loop; the reference the parallel path is tested against.
std::vector<Element> gatherRowsSerial(size_t count, const ChunkFn& fn);

using RowPredicate = std::function<bool(std::span<const Element>)>;

struct ScanResult {
    std::vector<Element> data; // rows * width elements, lexicographically sorted
    size_t rows = 0;
};

// All rows of the full tuple space that pass `pred`, in lexicographic order.
ScanResult scanSpace(size_t width, uint32_t universeSize, const RowPredicate& pred,
                     ExecPolicy policy);
ScanResult scanSpace(size_t width, uint32_t universeSize, const RowPredicate& pred);

// Reference implementation.
ScanResult scanSpaceSerial(size_t width, uint32_t universeSize, const RowPredicate& pred);

} // namespace folx::kernels
