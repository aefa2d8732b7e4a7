#include <iostream>

#include "wreathlab/suite.hpp"

int main() {
    bool ok = wreathlab::run_acceptance_suite(std::cout);
    return ok ? 0 : 1;
}
