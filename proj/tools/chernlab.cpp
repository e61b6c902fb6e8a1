#include "chern/cli.h"

#include <iostream>

int main(int argc, char **argv)
{
	return chern::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
