#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "finitary/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string stdin_text;
  for (const std::string& a : args)
    if (a == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      stdin_text = buf.str();
      break;
    }
  return finitary::run(args, stdin_text, std::cout, std::cerr);
}
