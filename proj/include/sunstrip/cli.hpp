#pragma once

// Command-line front end. run_cli takes the arguments after the program
// name and returns the process exit status:
//   0 success, 1 other failure, 2 usage or input error,
//   3 search budget exceeded, 4 verification mismatch.

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sunstrip/automaton.hpp"
#include "sunstrip/models.hpp"

namespace sunstrip {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Number of maximal configurations with exactly k houses (all lengths), for
// k = 0..kMax. Rows are generated until every row in a window of
// 2 * windowLen consecutive lengths has more than kMax houses.
std::vector<mpz_class> counts_by_houses(const ModelInfo& info, const TransferAutomaton& aut, int kMax);

// OEIS b-file: one "index value" line per term, starting at `offset`.
std::string to_bfile(const std::vector<mpz_class>& terms, int offset = 0);
// Parses a b-file, skipping blank lines and '#' comments.
std::vector<std::pair<long, mpz_class>> parse_bfile(const std::string& text);

}  // namespace sunstrip
