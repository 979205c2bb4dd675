#ifndef SOFDYCK_CLI_HPP
#define SOFDYCK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <sofdyck/shifts.hpp>

namespace sofdyck
{

namespace exit_code
{
constexpr int ok = 0;
constexpr int mismatch = 1;
constexpr int bad_input = 2;
constexpr int numeric_failure = 3;
constexpr int resource_guard = 4;
} // namespace exit_code

// Enumeration guard: refuse alphabet^length above this without --force.
constexpr double enumeration_guard = 1e9;

// "1:1,2;2:1" -> {{1,2},{1}}. Entries must cover 1..count exactly once.
// Throws std::invalid_argument on malformed text.
LetterSets parse_letter_sets(const std::string &text, int count);
std::string format_letter_sets(const LetterSets &sets);

// args excludes the program name. Payload goes to out, diagnostics to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sofdyck

#endif
