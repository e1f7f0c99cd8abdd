#include <iostream>

#include "opmult/workbench.hpp"

int main(int argc, char** argv)
{
    return opmult::workbench::main_entry(argc, argv, std::cout, std::cerr);
}
