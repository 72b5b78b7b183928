#include "nimshape/play.hpp"

#include <istream>
#include <ostream>

#include "nimshape/strategy.hpp"

namespace nimshape {

PlayResult play_session(Engine& engine, const SumPosition& start, PlayOptions options, std::istream& in,
                        std::ostream& out) {
	PlayResult result;
	SumPosition position = start;
	bool human_to_move = options.human_first;
	const bool misere = options.convention == Convention::misere;
	auto emit = [&](const std::string& line) {
		result.transcript.push_back(line);
		out << line << '\n';
	};

	emit(std::string("game: ") + (misere ? "misere" : "normal") + " play, human moves " +
	     (options.human_first ? "first" : "second"));
	for (;;) {
		emit("position: " + to_string(position, options.notation));
		if (is_terminal(position)) {
			// the player to move cannot move
			const bool mover_wins = misere;
			const bool human_wins = human_to_move == mover_wins;
			emit(std::string(human_wins ? "human" : "engine") + " wins");
			result.completed = true;
			result.human_won = human_wins;
			return result;
		}
		if (human_to_move) {
			std::optional<MoveDescriptor> move;
			while (!move) {
				out << "your move> " << std::flush;
				std::string line;
				if (!std::getline(in, line)) {
					emit("input ended; session aborted");
					return result;
				}
				if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
				try {
					move = parse_move(line, position);
				} catch (const std::exception& e) {
					out << "illegal move: " << e.what() << '\n';
				}
			}
			emit("human: " + format_move(position, *move));
			position = apply_move(position, *move);
		} else {
			const MoveChoice choice = best_move(engine, position, options.convention);
			emit("engine: " + format_move(position, choice.move) + (choice.winning ? "" : " (resigned: no winning move)"));
			position = choice.successor;
		}
		human_to_move = !human_to_move;
	}
}

}  // namespace nimshape
