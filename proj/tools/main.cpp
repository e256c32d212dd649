#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "inchilb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || (args.size() == 1 && args[0] == "--help")) {
    std::cout << inchilb::usage();
    return args.empty() ? 2 : 0;
  }
  try {
    inchilb::CliConfig cfg = inchilb::parse_args(args);
    return inchilb::run(cfg, std::cout);
  } catch (const inchilb::CliError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << inchilb::usage();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
