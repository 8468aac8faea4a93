#include "core/sample_io.hpp"
#include "core/errors.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tailfence {

std::vector<double> read_sample_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open sample file: " + path);
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;        // blank
        if (line[begin] == '#') continue;                // comment
        std::size_t end = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(begin, end - begin + 1);
        std::size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &consumed);
        } catch (const std::exception&) {
            consumed = 0;
        }
        if (consumed != token.size())
            throw parse_error("sample file " + path + ": malformed value at line " +
                              std::to_string(line_no));
        values.push_back(value);
    }
    if (values.empty())
        throw parse_error("sample file " + path + ": no observations");
    return values;
}

void write_sample_file(const std::string& path, const std::vector<double>& values) {
    std::ofstream out(path, std::ios::binary); // binary: keep LF endings everywhere
    if (!out)
        throw parse_error("cannot open output file: " + path);
    char buf[64];
    for (double v : values) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        out << buf;
    }
}

} // namespace tailfence
