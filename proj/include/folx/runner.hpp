#pragma once

#include <iosfwd>
#include <string>

#include "folx/extend.hpp"
#include "folx/parser.hpp"

namespace folx {

struct RunOptions {
    bool dumpAll = false;
    bool traceFixpoint = false;
    bool noAssert = false;
    size_t maxIterations = 0; // 0 = theoretical bound
    enum class Format { Text, Json } format = Format::Text;
    int threads = 0;    // 0 = keep the process default
    bool serial = false; // force the serial kernels
};

// Executes a parsed program statement by statement. Exit status: 0 on
// success with all `holds` queries true (unless noAssert); 1 on a
// parse/validation/load error or a failed assertion; 2 on a semantic error
// while answering a query.
int runProgram(const SourceProgram& program, const RunOptions& options, std::ostream& out,
               std::ostream& err);

int runProgramText(const std::string& text, const RunOptions& options, std::ostream& out,
                   std::ostream& err);

// Reads the file (or stdin for "-"), parses and runs it.
int runFile(const std::string& path, const RunOptions& options, std::ostream& out,
            std::ostream& err);

} // namespace folx
