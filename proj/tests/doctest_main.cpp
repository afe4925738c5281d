#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "resurge/numeric.hpp"

int main(int argc, char** argv) {
    resurge::set_precision_bits(256);
    return doctest::Context(argc, argv).run();
}
