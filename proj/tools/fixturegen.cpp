// Regenerates the fixture corpus under a target directory (default:
// fixtures/ next to the current directory). Deterministic; tests compare the
// shipped files against this output byte for byte.

#include "fixture_defs.hpp"
#include "ltsi/io.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";
    auto fixtures = ltsi_fixtures::build_all();
    for (const auto& f : fixtures) {
        std::string path = dir + "/" + f.name + ".ltsi";
        std::ofstream out(path);
        if (!out) {
            std::cerr << "cannot write " << path << "\n";
            return 1;
        }
        out << "# " << f.name << ": " << f.comment << "\n";
        out << ltsi::emit_ltsi(f.system);
        std::cout << path << "\n";
    }
    return 0;
}
