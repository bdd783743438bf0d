#include <iostream>
#include <string>
#include <vector>

#include <hassecone/cli.hpp>

int main(int argc, char** argv) {
  return hassecone::cli::run(std::vector<std::string>(argv, argv + argc),
                             std::cout, std::cerr);
}
