#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Reads "left | right" lines from a fixture file, skipping blanks and '#' comments.
inline std::vector<std::pair<std::string, std::string>> read_fixture_pairs(const std::string& name)
{
    std::ifstream in(std::string(WZ_FIXTURE_DIR) + "/" + name);
    if (!in)
        throw std::runtime_error("cannot open fixture " + name);
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        auto bar = line.find('|');
        if (bar == std::string::npos)
            throw std::runtime_error("malformed fixture line: " + line);
        out.emplace_back(trim(line.substr(0, bar)), trim(line.substr(bar + 1)));
    }
    return out;
}
