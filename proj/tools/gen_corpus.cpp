// Writes the bundled deterministic synthetic corpus, for demos and tests.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "facediv/synthetic.hpp"

int main(int argc, char** argv) {
    CLI::App app{"generate the synthetic demo corpus"};
    std::string out_dir = "corpus";
    int faces = 12;
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--faces", faces, "number of faces")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    try {
        const std::string manifest = facediv::synth::write_corpus(out_dir, faces);
        std::cout << "wrote " << faces << " faces; manifest at " << manifest << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
