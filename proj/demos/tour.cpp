// Small walk through the library: counts, a strip stack, a special puzzle.
#include <iostream>

#include "ringlab/catalog.hpp"
#include "ringlab/io.hpp"
#include "ringlab/local.hpp"

using namespace ringlab;

int main() {
  const auto set = enumerate_completions(initial_triangle(), initial_window());
  std::cout << "completions around one face: " << set.count << '\n';

  const auto word = stacking_words(2, 3).front();
  const auto stack = assemble(word, 2);
  std::cout << "height-2 stack of " << word.rows.size() << " rows: " << to_string(check(stack).status) << '\n';

  const auto puzzle = special_puzzle(7, 3);
  const auto d = induced_distribution(puzzle);
  std::cout << "special 7 is " << to_string(classify_distribution(d).family) << '\n';
  std::cout << serialize(puzzle.restricted(ball(up(0, 0), 1)));
}
