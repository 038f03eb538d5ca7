#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "support.hpp"

// Accepts --seed N or --seed=N in addition to the usual gtest flags.
int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      mconv::test::seed() = std::stoull(argv[i] + 7);
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      mconv::test::seed() = std::stoull(argv[++i]);
    } else {
      rest.push_back(argv[i]);
    }
  }
  int n = static_cast<int>(rest.size());
  ::testing::InitGoogleTest(&n, rest.data());
  return RUN_ALL_TESTS();
}
