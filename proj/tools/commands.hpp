#pragma once

namespace CLI {
class App;
}

// Thrown by a command that already reported its failure and only needs a
// specific process exit code.
struct ExitFailure {
    int code;
};

void register_boost(CLI::App& app);
void register_lut(CLI::App& app);
void register_synth(CLI::App& app);
void register_verify(CLI::App& app);
void register_bench(CLI::App& app);
