// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status 0 only when all pass.

#include <cstdio>
#include <cstring>
#include <string>

#include "liftforge/acceptance.hpp"
#include "liftforge/parallel.hpp"

int main(int argc, char** argv) {
  std::string filter;
  bool timings = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--timings") == 0) {
      timings = true;
    } else if (std::strcmp(argv[i], "--filter") == 0 && i + 1 < argc) {
      filter = argv[++i];
    } else if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) {
      liftforge::set_worker_count(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: acceptance_tests [--filter <substr>] [--timings] [--workers k]\n");
      return 2;
    }
  }
  auto results = liftforge::run_acceptance(filter);
  bool all = !results.empty();
  for (const auto& r : results) {
    std::printf("[%2d] %-4s %-26s %s", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    if (timings) std::printf("  (%.2fs)", r.seconds);
    std::printf("\n");
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "acceptance: ALL PASS" : "acceptance: FAILURES");
  return all ? 0 : 1;
}
