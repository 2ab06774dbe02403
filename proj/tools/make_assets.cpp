#include <planemu/planemu.hpp>

#include <iostream>

using namespace planemu;

int main(int argc, char ** argv)
{
    if (argc != 2) {
        std::cerr << "usage: make_assets <output directory>\n";
        return 2;
    }
    std::filesystem::path dir{argv[1]};
    try {
        std::filesystem::create_directories(dir);
        write_json_file(dir / "figure2.json", to_json(figure2_asset()));
        write_json_file(dir / "figure3.json", to_json(figure3_asset()));
    }
    catch (const std::exception & e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 0;
}
