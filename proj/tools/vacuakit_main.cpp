#include "vacuakit/cli.hpp"

int main(int argc, char** argv) {
    return vacuakit::run_cli(argc, argv);
}
