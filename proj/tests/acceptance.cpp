// Acceptance run: one PASS/FAIL line per criterion 1-9.
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "chainring/selftest.hpp"

using namespace chainring;

int main(int argc, char** argv) {
  selftest::SweepOptions opt;
  if (const char* t = std::getenv("CHAINRING_THREADS")) opt.threads = static_cast<unsigned>(std::atoi(t));
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--quick") opt.s_max = 2, opt.ring_bound = 256;

  auto results = selftest::run_all(opt);
  std::map<int, std::vector<const selftest::CriterionResult*>> by_id;
  for (const auto& c : results) by_id[c.id].push_back(&c);

  bool all = true;
  for (int id = 1; id <= 9; ++id) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      std::printf("FAIL criterion %d: not evaluated\n", id);
      all = false;
      continue;
    }
    bool pass = true;
    u64 cases = 0, failures = 0;
    double seconds = 0;
    std::string names, detail;
    for (const auto* c : it->second) {
      pass = pass && c->pass;
      cases += c->cases;
      failures += c->failures;
      seconds += c->seconds;
      names += (names.empty() ? "" : " + ") + c->name;
      if (!c->detail.empty()) detail += (detail.empty() ? "" : "; ") + c->detail;
    }
    all = all && pass;
    std::printf("%s criterion %d (%s): %llu cases, %llu failures, %.1f s%s%s\n", pass ? "PASS" : "FAIL", id,
                names.c_str(), static_cast<unsigned long long>(cases), static_cast<unsigned long long>(failures),
                seconds, detail.empty() ? "" : "; ", detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
