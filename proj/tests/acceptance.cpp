// Acceptance gate: one PASS/FAIL line per criterion. Tolerances are the ones
// pinned in validation.cpp. Runs the full suite twice and byte-compares the
// written reports for the determinism criterion.
//
//   wmcorr_acceptance [--expect-fail C8 ...] [--work DIR]
//
// Exit 0 only when the failing set equals the expected-failure set.

#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

#include "wmcorr/validation.hpp"

namespace fs = std::filesystem;
using namespace wmcorr;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool same_tree(const fs::path& a, const fs::path& b, std::string& why) {
  std::set<std::string> names;
  for (const auto& dir : {a, b}) {
    for (const auto& e : fs::directory_iterator(dir)) names.insert(e.path().filename().string());
  }
  for (const auto& n : names) {
    if (!fs::exists(a / n) || !fs::exists(b / n)) {
      why = n + " missing in one run";
      return false;
    }
    if (slurp(a / n) != slurp(b / n)) {
      why = n + " differs";
      return false;
    }
  }
  why = std::to_string(names.size()) + " files identical";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> expected;
  fs::path work = fs::temp_directory_path() / "wmcorr_acceptance";
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      expected.insert(argv[++i]);
    } else if (a == "--work" && i + 1 < argc) {
      work = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--expect-fail ID]... [--work DIR]\n", argv[0]);
      return 2;
    }
  }

  try {
    fs::remove_all(work);
    const ValidationSummary first = validate_all();
    write_validation(first, work / "run1");
    const ValidationSummary second = validate_all();
    write_validation(second, work / "run2");
    std::string why;
    const bool identical = same_tree(work / "run1", work / "run2", why);

    std::set<std::string> failed;
    for (const auto& c : first.criteria) {
      bool pass = c.passed;
      std::string detail = c.detail;
      if (c.id == "C10") {
        pass = pass && identical;
        detail += "; validate x2: " + why;
      }
      if (!pass) failed.insert(c.id);
      std::printf("%s %-4s %s: %s [%.2f s%s]\n", pass ? "PASS" : "FAIL", c.id.c_str(),
                  c.title.c_str(), detail.c_str(), c.runtime_s,
                  c.runtime_limit_s > 0 ? (" of " + std::to_string(int(c.runtime_limit_s)) + " s").c_str() : "");
    }
    for (const auto& id : failed) {
      if (expected.count(id)) std::printf("note: %s failure is expected (see README)\n", id.c_str());
    }
    for (const auto& id : expected) {
      if (!failed.count(id)) std::printf("note: %s was expected to fail but passed\n", id.c_str());
    }
    return failed == expected ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
    return 1;
  }
}
