#include "seedspan/games/registry.hpp"

#include "seedspan/games/cantstop.hpp"
#include "seedspan/games/connect4.hpp"
#include "seedspan/games/kuhn.hpp"
#include "seedspan/games/loveletter.hpp"

namespace seedspan {

const std::vector<std::string>& game_names() {
    static const std::vector<std::string> names = {"cantstop", "connect4", "kuhn", "loveletter"};
    return names;
}

std::unique_ptr<Game> build_game(const std::string& name) {
    if (name == "connect4") return std::make_unique<Connect4Game>();
    if (name == "cantstop") return std::make_unique<CantStopGame>();
    if (name == "loveletter") return std::make_unique<LoveLetterGame>();
    if (name == "kuhn") return std::make_unique<KuhnGame>();
    std::string valid;
    for (const auto& n : game_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw ConfigError("unknown game '" + name + "' (valid games: " + valid + ")");
}

} // namespace seedspan
