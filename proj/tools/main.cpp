#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "meb/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Reveal and re-time subtle motion in short clips with one "
                 "precomputed linear operator"};
    app.require_subcommand(1);
    register_boost(app);
    register_lut(app);
    register_synth(app);
    register_verify(app);
    register_bench(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ExitFailure& e) {
        return e.code;
    } catch (const meb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
