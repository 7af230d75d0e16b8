// Writes the eps-weighted doubled graph of every half-graph fixture to <out-dir>/<name>.json.
#include "wz/powercount.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    if (argc != 2 && argc != 3) {
        std::cerr << "usage: wz-export-graphs <out-dir> [fixture-dir]\n";
        return 2;
    }
    std::filesystem::path out(argv[1]);
    std::filesystem::create_directories(out);
    auto all = argc == 3 ? wz::fixtures(argv[2]) : wz::fixtures();
    for (const auto& f : all) {
        std::string file = f.half.name;
        for (auto& ch : file)
            if (ch == '/')
                ch = '_';
        std::ofstream(out / (file + ".json")) << wz::graph_to_json(f.graph);
    }
    std::cout << all.size() << " graphs written to " << out.string() << "\n";
    return 0;
}
