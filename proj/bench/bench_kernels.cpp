// Compares the serial reference kernels against the OpenMP path on the
// engine's hot operations. Build and run: ./folx_bench [--quick]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "folx/extend.hpp"
#include "folx/relalg.hpp"
#include "folx/semantics.hpp"

using namespace folx;

namespace {

// best of three runs
double timeMs(const std::function<void()>& fn) {
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
        auto start = std::chrono::steady_clock::now();
        fn();
        auto end = std::chrono::steady_clock::now();
        best = std::min(best,
                        std::chrono::duration<double, std::milli>(end - start).count());
    }
    return best;
}

void row(const char* name, double serialMs, double parallelMs) {
    std::printf("%-32s %10.2f ms %10.2f ms %8.2fx\n", name, serialMs, parallelMs,
                parallelMs > 0 ? serialMs / parallelMs : 0.0);
}

void withPolicy(kernels::ExecPolicy policy, const std::function<void()>& fn) {
    auto previous = kernels::defaultPolicy();
    kernels::setDefaultPolicy(policy);
    fn();
    kernels::setDefaultPolicy(previous);
}

HornBlock gcdBlock() {
    auto v = [](const char* n) { return Term::variable(n); };
    HornBlock block;
    block.symbols = {{"gcd", 3}};
    Clause c1;
    c1.headSymbol = "gcd";
    c1.headVars = {"x", "y", "z"};
    c1.body = {Formula::atom("lt", {v("x"), v("y")}),
               Formula::atom("gcd", {v("x"), Term::apply("sub", {v("y"), v("x")}), v("z")})};
    Clause c2;
    c2.headSymbol = "gcd";
    c2.headVars = {"x", "y", "z"};
    c2.body = {Formula::atom("lt", {v("y"), v("x")}),
               Formula::atom("gcd", {Term::apply("sub", {v("x"), v("y")}), v("y"), v("z")})};
    Clause c3;
    c3.headSymbol = "gcd";
    c3.headVars = {"x", "y", "z"};
    c3.body = {Formula::eq(v("y"), v("x")), Formula::eq(v("z"), v("x"))};
    block.clauses = {c1, c2, c3};
    return block;
}

TheoryDecl euclideanTheory() {
    TheoryDecl t;
    t.name = "ed";
    t.constants = {"zero", "unit"};
    t.functions = {{"add", 2}, {"sub", 2}, {"mul", 2}};
    t.relations = {{"lt", 2}, {"eq", 2}};
    return t;
}

} // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        quick |= std::strcmp(argv[i], "--quick") == 0;

    std::printf("threads: %d\n", kernels::threadCount());
    std::printf("%-32s %13s %13s %9s\n", "workload", "serial", "parallel", "speedup");

    // tuple-space scan: assignments over 3 variables satisfying a residue test
    {
        uint32_t n = quick ? 61 : 151;
        auto pred = [n](std::span<const Element> r) {
            return (uint64_t(r[0]) * r[1] + r[2]) % n == 1;
        };
        kernels::ScanResult serial, parallel;
        double s = timeMs([&] { serial = kernels::scanSpaceSerial(3, n, pred); });
        double p = timeMs([&] {
            parallel = kernels::scanSpace(3, n, pred, kernels::ExecPolicy::Parallel);
        });
        if (serial.data != parallel.data)
            std::fprintf(stderr, "scan mismatch!\n");
        row("tuple-space scan |D|^3", s, p);
    }

    // complement of a thin relation over a 4-column space
    {
        uint32_t n = quick ? 12 : 26;
        RelationBuilder b(IndexSet::names({"a", "b", "c", "d"}), n);
        for (Element i = 0; i < n; ++i)
            b.addRow({i, i, i, i});
        Relation r = b.build();
        Relation serial, parallel;
        double s = timeMs([&] {
            withPolicy(kernels::ExecPolicy::Serial, [&] { serial = complement(r); });
        });
        double p = timeMs([&] {
            withPolicy(kernels::ExecPolicy::Parallel, [&] { parallel = complement(r); });
        });
        if (!(serial == parallel))
            std::fprintf(stderr, "complement mismatch!\n");
        row("complement |D|^4", s, p);
    }

    // hash join of two wide random-ish relations
    {
        uint32_t n = quick ? 40 : 160;
        RelationBuilder b0(IndexSet::names({"x", "y"}), n);
        RelationBuilder b1(IndexSet::names({"y", "z"}), n);
        for (Element i = 0; i < n; ++i)
            for (Element j = 0; j < n; ++j) {
                if ((i * 7 + j) % 3 == 0)
                    b0.addRow({i, j});
                if ((i * 5 + j) % 4 == 0)
                    b1.addRow({i, j});
            }
        Relation r0 = b0.build(), r1 = b1.build();
        Relation serial, parallel;
        double s = timeMs([&] {
            withPolicy(kernels::ExecPolicy::Serial, [&] { serial = join(r0, r1); });
        });
        double p = timeMs([&] {
            withPolicy(kernels::ExecPolicy::Parallel, [&] { parallel = join(r0, r1); });
        });
        if (!(serial == parallel))
            std::fprintf(stderr, "join mismatch!\n");
        row("join", s, p);
    }

    // the gcd fixpoint over a modular domain
    {
        uint32_t m = quick ? 23 : 61;
        auto state = ExtensionState::base(euclideanTheory(), makeModRing(m));
        HornSystem sys = HornSystem::compile(gcdBlock(), state.symbols());
        RelationMap serial, parallel;
        double s = timeMs([&] {
            withPolicy(kernels::ExecPolicy::Serial, [&] {
                serial = solveHornSystem(state.interpretation(), sys).relations;
            });
        });
        double p = timeMs([&] {
            withPolicy(kernels::ExecPolicy::Parallel, [&] {
                parallel = solveHornSystem(state.interpretation(), sys).relations;
            });
        });
        if (!(serial == parallel))
            std::fprintf(stderr, "fixpoint mismatch!\n");
        std::string label = "gcd fixpoint mod " + std::to_string(m);
        row(label.c_str(), s, p);
    }

    return 0;
}
