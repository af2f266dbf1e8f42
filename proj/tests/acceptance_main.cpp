// Acceptance gate: each criterion prints exactly one PASS/FAIL line. With no
// arguments all criteria run; with numeric arguments only those run. Exit 0
// iff everything that ran passed.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "extremalkit/selftest.hpp"

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    long id = std::strtol(argv[i], &end, 10);
    if (!end || *end != '\0' || id < 1 || id > exk::selftest::criterion_count()) {
      std::fprintf(stderr, "usage: %s [criterion 1..%d]...\n", argv[0],
                   exk::selftest::criterion_count());
      return 2;
    }
    only.push_back(static_cast<int>(id));
  }

  bool all_pass = true;
  auto results = exk::selftest::run(only, [&](const exk::selftest::CriterionResult& r) {
    all_pass = all_pass && r.pass;
    std::printf("[%s] criterion %d: %s (%.1fs) -- %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
  });
  return all_pass ? 0 : 1;
}
