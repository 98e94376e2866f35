#ifndef PACIOLI_CLI_HPP
#define PACIOLI_CLI_HPP

namespace pacioli {

// Exit codes: 0 decided; 3 undecided at max precision; 4 infeasible
// configuration; 2 usage error; 1 I/O or internal error.
int cli_main(int argc, const char* const* argv);

}  // namespace pacioli

#endif
