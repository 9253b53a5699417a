// Two children, both muddy.  Each sees the other's forehead.  Father says at
// least one of you is muddy; then both say they don't know; then each knows.

#include <iostream>

#include "pal/pal.hpp"

int main() {
  using namespace pal;
  const EpistemicModel m = ModelBuilder({"mm", "mc", "cm"})
                               .agent_partition("a", {{"mm", "cm"}, {"mc"}})
                               .agent_partition("b", {{"mm", "mc"}, {"cm"}})
                               .atom("ma", {"mm", "mc"})
                               .atom("mb", {"mm", "cm"})
                               .build();

  const Formula nobody_knows = parse("~(K a ma | K a ~ma) & ~(K b mb | K b ~mb)");
  const Formula both_know = parse("K a ma & K b mb");

  std::cout << "at mm before:  " << render(both_know) << " = " << std::boolalpha
            << eval_direct(m, "mm", both_know) << "\n";
  const Formula after = announce(nobody_knows, both_know);
  std::cout << "at mm: " << render(after) << " = " << eval_direct(m, "mm", after) << "\n";
  std::cout << "same under domain semantics: " << eval_sse(m, m.all_worlds(), 0, after) << "\n";

  const EpistemicModel next = announce(m, nobody_knows);
  std::cout << "worlds left: " << next.world_count() << "\n" << to_json(next).dump(2) << "\n";
}
