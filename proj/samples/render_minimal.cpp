// Render the minimal steep tiling of a word to SVG on stdout:
//   render_minimal ++--- +   > minimal.svg

#include <oblique/render.hpp>
#include <oblique/steep.hpp>

#include <cstdio>
#include <iostream>

int main(int argc, char** argv) {
    using namespace oblique;
    std::string word = argc > 1 ? argv[1] : "+++++---++";
    try {
        SignWord w = SignWord::parse(word);
        TilingWindow t = minimal_tiling(w, w.length() + 2);
        std::cout << render_tiling_svg(t, true);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
