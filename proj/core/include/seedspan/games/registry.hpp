#pragma once
#include <memory>
#include <string>
#include <vector>

#include "seedspan/engine.hpp"

namespace seedspan {

// Construct a built-in game by name: "connect4", "cantstop", "loveletter",
// "kuhn". Unknown names raise ConfigError listing the valid choices.
std::unique_ptr<Game> build_game(const std::string& name);

const std::vector<std::string>& game_names();

} // namespace seedspan
