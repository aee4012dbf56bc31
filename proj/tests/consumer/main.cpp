#include <iostream>

#include "sierpinski/tiling.hpp"

int main() { std::cout << sierpinski::count_good_tiles(3, 1).get_str() << "\n"; }
