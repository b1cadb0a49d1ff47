#include <doctest.h>

#include "common/gen.hpp"
#include "folx/kernels.hpp"
#include "folx/relalg.hpp"

using namespace folx;

TEST_CASE("spaceSize and rank decoding") {
    CHECK(kernels::spaceSize(0, 5) == 1);
    CHECK(kernels::spaceSize(3, 4) == 64);
    CHECK_THROWS_AS(kernels::spaceSize(8, 65521), Error);

    std::vector<Element> row(3);
    kernels::decodeRank(0, 4, row);
    CHECK(row == std::vector<Element>{0, 0, 0});
    kernels::decodeRank(63, 4, row);
    CHECK(row == std::vector<Element>{3, 3, 3});
    kernels::decodeRank(6, 4, row);
    CHECK(row == std::vector<Element>{0, 1, 2});
}

TEST_CASE("parallel scan matches the serial reference") {
    testgen::Rng rng(4001);
    for (int trial = 0; trial < 20; ++trial) {
        uint32_t n = 2 + static_cast<uint32_t>(testgen::pick(rng, 15));
        size_t width = 1 + testgen::pick(rng, 3);
        uint64_t salt = rng();
        auto pred = [salt, n](std::span<const Element> row) {
            uint64_t h = salt;
            for (Element e : row)
                h = h * 31 + e;
            return h % 3 == 0;
        };
        auto serial = kernels::scanSpaceSerial(width, n, pred);
        auto parallel = kernels::scanSpace(width, n, pred, kernels::ExecPolicy::Parallel);
        CHECK(serial.rows == parallel.rows);
        CHECK(serial.data == parallel.data);
    }
}

TEST_CASE("scan output is sorted and lexicographic") {
    auto scan = kernels::scanSpace(2, 7, [](std::span<const Element> r) {
        return (r[0] + r[1]) % 2 == 0;
    });
    REQUIRE(scan.rows > 1);
    for (size_t i = 1; i < scan.rows; ++i) {
        std::span<const Element> prev(scan.data.data() + (i - 1) * 2, 2);
        std::span<const Element> cur(scan.data.data() + i * 2, 2);
        CHECK(std::lexicographical_compare(prev.begin(), prev.end(), cur.begin(), cur.end()));
    }
}

TEST_CASE("gatherRows keeps chunk order under parallel execution") {
    // each index emits itself; output must be the identity sequence
    auto chunk = [](size_t begin, size_t end, std::vector<Element>& out) {
        for (size_t i = begin; i < end; ++i)
            out.push_back(static_cast<Element>(i));
    };
    size_t count = 100000;
    auto serial = kernels::gatherRowsSerial(count, chunk);
    auto parallel = kernels::gatherRows(count, chunk, kernels::ExecPolicy::Parallel);
    CHECK(serial == parallel);
}

TEST_CASE("relational operations agree across policies") {
    testgen::Rng rng(4002);
    auto saved = kernels::defaultPolicy();
    for (int trial = 0; trial < 10; ++trial) {
        uint32_t n = 2 + static_cast<uint32_t>(testgen::pick(rng, 6));
        Relation a = testgen::randomRelation(rng, IndexSet::names({"x", "y"}), n);
        Relation b = testgen::randomRelation(rng, IndexSet::names({"y", "z"}), n);

        kernels::setDefaultPolicy(kernels::ExecPolicy::Serial);
        Relation joinS = join(a, b);
        Relation compS = complement(a);
        kernels::setDefaultPolicy(kernels::ExecPolicy::Parallel);
        Relation joinP = join(a, b);
        Relation compP = complement(a);

        CHECK(joinS == joinP);
        CHECK(compS == compP);
    }
    kernels::setDefaultPolicy(saved);
}
